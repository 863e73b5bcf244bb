#include "lowindex/cli.hpp"

int main(int argc, char** argv) { return lowindex::cli_main(argc, argv); }
