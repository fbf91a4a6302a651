#pragma once

#include "tsaug/series.hpp"

#include <string>

namespace tsaug {

/// Loads a UCR-style file: one record per line, label first, then the
/// samples. Tab-separated is the canonical form; comma- and space-separated
/// lines are accepted as fallbacks. `NaN` tokens and empty fields are read
/// as missing values (stored as NaN; run sanitize() to zero them).
///
/// Throws std::runtime_error on an unreadable path, an empty file, or a
/// malformed row.
Dataset load_ucr_tsv(const std::string& path, Split split,
                     const std::string& dataset_name = "");

/// Writes tab-separated UCR format, label first, values with 17 significant
/// digits so a round trip is bit-exact.
void save_ucr_tsv(const Dataset& ds, const std::string& path);

/// The exact value formatting used by the writer (also handy for reports).
std::string format_value(double v);

} // namespace tsaug
