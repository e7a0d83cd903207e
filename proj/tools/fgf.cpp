#include "fgf/cli.hpp"

int main(int argc, char** argv) { return fgf::cli::main(argc, argv); }
