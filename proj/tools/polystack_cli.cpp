#include "polystack/io.hpp"

int main(int argc, char** argv) { return polystack::run_cli(argc, argv); }
