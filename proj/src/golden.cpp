#include "rsos/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef RSOS_DATA_DIR
#define RSOS_DATA_DIR "data"
#endif

namespace rsos {

std::vector<SeriesTerm> series_terms(const QSeries& s, int bound) {
    std::vector<SeriesTerm> out;
    if (s.is_zero()) return out;
    const int top = std::min({bound, s.end_exponent(), s.order()});
    for (int e = s.valuation(); e < top; ++e) {
        const ZetaPoly c = s.coeff(e);
        for (const auto& [z, x] : c.terms()) out.push_back({Rational(e, 2), z, x});
    }
    for (auto& t : out) t.qexp.canonicalize();
    return out;
}

std::string format_terms(const QSeries& s, int bound) {
    std::vector<SeriesTerm> ts = series_terms(s, bound);
    if (ts.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < ts.size(); ++i)
        os << (i ? " " : "") << ts[i].qexp.get_str() << ':' << ts[i].zexp << ':' << ts[i].coeff.get_str();
    return os.str();
}

QSeries parse_terms(const std::string& text, int order) {
    QSeries s = QSeries::zero(order);
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "0") continue;
        const auto a = tok.find(':'), b = tok.find(':', a + 1);
        if (a == std::string::npos || b == std::string::npos) throw std::runtime_error("bad series term '" + tok + "'");
        Rational q(tok.substr(0, a)), c(tok.substr(b + 1));
        q.canonicalize();
        c.canonicalize();
        const Rational u = q * 2;
        if (u.get_den() != 1) throw std::runtime_error("q-exponent is not a half-integer in '" + tok + "'");
        s += QSeries::monomial(c, static_cast<int>(u.get_num().get_si()), std::stoi(tok.substr(a + 1, b - a - 1)), order);
    }
    return s;
}

std::vector<std::vector<std::string>> read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> row;
        std::size_t start = 0;
        while (true) {
            const auto tab = line.find('\t', start);
            row.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string golden_path(const std::string& name) {
    const char* env = std::getenv("RSOS_DATA_DIR");
    return std::string(env && *env ? env : RSOS_DATA_DIR) + "/golden/" + name;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

} // namespace rsos
