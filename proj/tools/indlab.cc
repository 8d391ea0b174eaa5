#include <indlab/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return indlab::cli_main(argc, argv, std::cout, std::cerr);
}
