#include <iostream>

#include "twoside/cli.hpp"

int main(int argc, char** argv)
{
    return twoside::cli_main(argc, argv, std::cout, std::cerr);
}
