#include "hankel/cli.hpp"

int main(int argc, char** argv) { return hankel::cli_run(argc, argv); }
