#include "differsat/cli.hpp"

int main(int argc, char** argv) { return differsat::cli::cli_main(argc, argv); }
