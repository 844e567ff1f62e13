#include "clustnet/cli.hpp"

int main(int argc, char** argv) { return clustnet::cli::main(argc, argv); }
