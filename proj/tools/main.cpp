#include "etalift/cli.hpp"

int main(int argc, char** argv) { return etalift::run_cli(argc, argv); }
