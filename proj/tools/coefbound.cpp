#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <coefbound/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_workers;
    if (const char *w = std::getenv("COEFBOUND_WORKERS")) {
        env_workers = w;
    }
    return coefbound::cli::main_entry(args, std::cout, std::cerr, env_workers);
}
