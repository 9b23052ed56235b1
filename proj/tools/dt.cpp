// Command-line front end. Subcommands are filled in alongside the library;
// this stub keeps the build wired while the core goes in.
#include <dt/ratfunc.hpp>

#include <iostream>

int main() {
    std::cout << "dt: no subcommands wired yet\n";
    return 2;
}
