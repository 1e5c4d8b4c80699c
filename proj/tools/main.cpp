#include "ctrnn/cli.hpp"

int main(int argc, char** argv) { return ctrnn::run_cli(argc, argv); }
