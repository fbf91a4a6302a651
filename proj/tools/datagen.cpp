// Writes the deterministic synthetic fixture datasets used by the demo and
// the test suites (CBF plus shaped stand-ins for ECG5000 and Fungi).

#include "tsaug/synth.hpp"
#include "tsaug/ucr_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <vector>

int main(int argc, char** argv) {
    CLI::App app{"Generate the synthetic benchmark fixtures"};
    std::string out_dir = ".";
    std::string sets = "cbf,ecg5000,fungi";
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--sets", sets, "Comma-separated subset of cbf,ecg5000,fungi");
    CLI11_PARSE(app, argc, argv);

    std::filesystem::create_directories(out_dir);

    std::stringstream ss(sets);
    std::string name;
    try {
        while (std::getline(ss, name, ',')) {
            if (name.empty()) continue;
            for (auto split : {tsaug::Split::train, tsaug::Split::test}) {
                tsaug::Dataset ds = tsaug::synth::make(name, split);
                const std::string file = ds.name +
                    (split == tsaug::Split::train ? "_TRAIN.tsv" : "_TEST.tsv");
                const auto path = (std::filesystem::path(out_dir) / file).string();
                tsaug::save_ucr_tsv(ds, path);
                std::cerr << "wrote " << path << " (" << ds.size() << " items)\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
