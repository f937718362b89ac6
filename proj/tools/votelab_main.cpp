#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "votelab/app.hpp"
#include "votelab/manifest.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    votelab::RunManifest manifest;
    try {
        manifest = votelab::parse_manifest(args);
    } catch (const votelab::HelpRequested& help) {
        std::cout << help.what();
        return 0;
    } catch (const votelab::ManifestError& e) {
        std::cerr << "votelab: " << e.what() << "\n";
        return 2;
    }
    try {
        votelab::run_manifest(manifest, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "votelab: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
