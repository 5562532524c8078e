#include "cil/cli.hpp"

#include <iostream>

int main( int argc, char** argv ) { return cil::run_cli( argc, argv, std::cout, std::cerr ); }
