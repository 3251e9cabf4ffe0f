// Acceptance suite: runs every acceptance check at full scale and prints
// one pass/fail line per criterion. Exit status 0 iff everything passes.

#include <cstdlib>
#include <iostream>
#include <string>

#include "niltrace/acceptance.hpp"

int main(int argc, char** argv) {
    niltrace::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* name) {
            if (i + 1 >= argc) {
                std::cerr << name << " needs a value\n";
                std::exit(2);
            }
            return std::strtoull(argv[++i], nullptr, 10);
        };
        if (arg == "--seed")
            opt.seed = next("--seed");
        else if (arg == "--canon-trials")
            opt.canon_trials = next("--canon-trials");
        else if (arg == "--conjugate-trials")
            opt.conjugate_trials = next("--conjugate-trials");
        else if (arg == "--template-trials")
            opt.template_trials = next("--template-trials");
        else {
            std::cerr << "usage: acceptance [--seed N] [--canon-trials N]"
                         " [--conjugate-trials N] [--template-trials N]\n";
            return 2;
        }
    }
    return niltrace::run_acceptance(std::cout, opt) ? 0 : 1;
}
