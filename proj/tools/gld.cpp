#include "gld/cli.hpp"
#include "gld/errors.hpp"

#include <iostream>

int main(int argc, char** argv) {
    gld::RunSpec spec;
    try {
        spec = gld::parse_args(argc, argv);
    } catch (const gld::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n'
                  << "usage: gld <solve|converge|stability|truncation> --example NAME [options]\n";
        return 2;
    }
    return gld::execute(spec, std::cout, std::cerr);
}
