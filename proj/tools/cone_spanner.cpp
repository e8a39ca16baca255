#include "conespan/cli.hpp"

int main(int argc, char** argv) { return conespan::run_cli(argc, argv); }
