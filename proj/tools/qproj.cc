#include <qproj/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return qproj::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
