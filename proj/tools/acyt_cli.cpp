#include "acyt/cli.hpp"

int main(int argc, char** argv) { return acyt::cli_main(argc, argv); }
