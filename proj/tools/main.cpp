#include "fifwave/cli.hpp"

int main(int argc, char** argv) { return fif::run_cli(argc, argv); }
