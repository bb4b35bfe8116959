#pragma once

// Plain-text encodings of series and the tab-separated reference tables
// under data/golden.

#include <string>
#include <vector>

#include "rsos/series.hpp"

namespace rsos {

/// One term c q^qexp zeta^zexp; qexp is a half-integer in general.
struct SeriesTerm {
    Rational qexp;
    int zexp = 0;
    Rational coeff;
};

/// Terms below u^bound, sorted by q-power then zeta-power.
std::vector<SeriesTerm> series_terms(const QSeries& s, int bound);

/// "qexp:zexp:coeff" terms separated by spaces, e.g. "1:0:-1 3:0:2";
/// "0" for the zero series.
std::string format_terms(const QSeries& s, int bound);
QSeries parse_terms(const std::string& text, int order = kExact);

/// Rows of a tab-separated file; blank lines and lines starting with '#'
/// are skipped. Throws std::runtime_error when the file cannot be read.
std::vector<std::vector<std::string>> read_table(const std::string& path);

/// data/golden/<name>, relative to RSOS_DATA_DIR when set.
std::string golden_path(const std::string& name);

/// "7,5,3" -> {7, 5, 3}; "" and "-" give the empty list.
std::vector<int> parse_int_list(const std::string& text);

} // namespace rsos
