#include "apolar/cli.hpp"

int main(int argc, char** argv) { return apolar::cli_main(argc, argv); }
