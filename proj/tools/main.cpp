#include "cli.hpp"

int main(int argc, char** argv) { return aquanim::cli_main(argc, argv); }
