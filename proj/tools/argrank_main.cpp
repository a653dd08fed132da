#include "argrank/cli.hpp"

int main(int argc, char** argv) { return argrank::cli::run_main(argc, argv); }
