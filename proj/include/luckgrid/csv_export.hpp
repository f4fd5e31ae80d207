#pragma once

#include <filesystem>

#include "luckgrid/engine.hpp"

namespace luckgrid {

/// Writes agents.csv, timeseries.csv, lucky_hist.csv, unlucky_hist.csv
/// and wealth_hist.csv into dir, creating it if needed. Floating-point
/// fields use 6 significant digits; an undefined gini prints as nan.
/// Same result and dir always produce byte-identical files. I/O failures
/// throw std::runtime_error naming the path.
void export_run(const RunResult& result, const std::filesystem::path& dir);

} // namespace luckgrid
