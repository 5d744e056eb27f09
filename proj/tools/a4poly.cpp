#include "a4/cli.hpp"

int main(int argc, char** argv) { return a4::run_cli(argc, argv); }
