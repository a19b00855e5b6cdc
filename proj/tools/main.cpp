#include "funceq/cli.hpp"

int main(int argc, char** argv) { return funceq::run_cli(argc, argv); }
