#include <iostream>

#include <qpartid/cli.hpp>

int main(int argc, char **argv)
{
    return qpartid::cli::run(argc, argv, std::cout, std::cerr);
}
