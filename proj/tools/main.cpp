#include "monogen/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return monogen::run_cli(argc, argv, std::cout, std::cerr);
}
