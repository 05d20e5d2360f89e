#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    (void)onikit::cli::seed_from_environment();
    std::vector<std::string> args(argv + 1, argv + argc);
    return onikit::cli::run(std::move(args), std::cin, std::cout);
}
