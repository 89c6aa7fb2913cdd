#include "gtclust/cli.hpp"

int main(int argc, char** argv) { return gtclust::run_cli(argc, argv); }
