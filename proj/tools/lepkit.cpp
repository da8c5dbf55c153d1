#include "lepkit/cli.hpp"

int main(int argc, char** argv) { return lepkit::cli_main(argc, argv); }
