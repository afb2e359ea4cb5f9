#include "xsieve/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace xsieve {

KGrid KGrid::build(double alpha, int n) {
    if (alpha < 2.0) throw std::invalid_argument("KGrid: alpha must be >= 2");
    if (n < 2) throw std::invalid_argument("KGrid: n must be >= 2");
    KGrid g;
    g.alpha = alpha;
    g.n = n;
    double kn = std::pow(2.0, alpha);
    g.levels.resize(static_cast<size_t>(n) + 6);
    for (int h = 0; h <= n; ++h) g.levels[h] = kn * h / n;
    double cap = std::pow(2.0, alpha) /
                 (std::pow(2.0, alpha) / std::pow(10.0, alpha) + std::pow(0.9, alpha));
    g.levels[n + 1] = std::min(std::pow(3.0, alpha) / 2.0, cap);
    g.levels[n + 2] = std::pow(4.0, alpha) / 2.0;
    g.levels[n + 3] = std::pow(4.5, alpha) / 2.0;
    g.levels[n + 4] = std::pow(5.0, alpha) / 2.0;
    g.levels[n + 5] = std::pow(5.5, alpha) / 2.0;
    for (size_t i = 1; i < g.levels.size(); ++i)
        if (!(g.levels[i] > g.levels[i - 1]))
            throw std::logic_error("KGrid: levels not strictly increasing");
    return g;
}

BetaSplit beta_split(const KGrid& grid, double k_target, int max_level) {
    if (k_target < -1e-12 || k_target > grid.levels[max_level] + 1e-12)
        throw std::out_of_range("beta_split: k outside the level range");
    k_target = std::clamp(k_target, 0.0, grid.levels[max_level]);
    // largest level <= k, smallest level >= k
    int hi = 0;
    while (hi < max_level && grid.levels[hi] < k_target - 1e-15) ++hi;
    BetaSplit s;
    if (std::fabs(grid.levels[hi] - k_target) < 1e-13) {
        s.k_lo = s.k_hi = grid.levels[hi];
        s.beta = 1.0;
        return s;
    }
    s.k_hi = grid.levels[hi];
    s.k_lo = grid.levels[hi - 1];
    s.beta = (k_target - s.k_lo) / (s.k_hi - s.k_lo);
    return s;
}

BetaSplit beta_split(const KGrid& grid, double k_target) {
    return beta_split(grid, k_target, grid.n);
}

BoundTable BoundTable::zeros(const KGrid& grid, double u_min, double u_step, double u_max) {
    BoundTable t;
    t.grid = grid;
    t.u_min = u_min;
    t.u_step = u_step;
    t.u_count = static_cast<int>(std::floor((u_max - u_min) / u_step + 0.5)) + 1;
    t.wF.assign(static_cast<size_t>(grid.n) + 1, std::vector<double>(t.u_count, 0.0));
    t.wf.assign(static_cast<size_t>(grid.n) + 6, std::vector<double>(t.u_count, 0.0));
    t.flat_u.assign(static_cast<size_t>(grid.n) + 6, 2.0);
    return t;
}

int BoundTable::index_of(double u) const {
    int i = static_cast<int>(std::llround((u - u_min) / u_step));
    return std::clamp(i, 0, u_count - 1);
}

double BoundTable::weight(double k, double u) const {
    return u + k / (grid.alpha * std::pow(u, grid.alpha - 1.0));
}

namespace {

// Directed linear interpolation in u. dir=+1 rounds up by the local
// second-difference bound, dir=-1 rounds down; exact at the samples.
double read_row(const std::vector<double>& row, double u_min, double u_step,
                double u, int dir) {
    int count = static_cast<int>(row.size());
    if (count == 0) throw std::logic_error("empty table row");
    double pos = (u - u_min) / u_step;
    if (pos <= 0.0) return row.front();
    if (pos >= count - 1) return row.back();
    int i = static_cast<int>(pos);
    double theta = pos - i;
    if (theta < 1e-12) return row[i];
    if (theta > 1.0 - 1e-12) return row[i + 1];
    double lin = row[i] + theta * (row[i + 1] - row[i]);
    double d2 = 0.0;
    if (i > 0) d2 = std::max(d2, std::fabs(row[i - 1] - 2.0 * row[i] + row[i + 1]));
    if (i + 2 < count) d2 = std::max(d2, std::fabs(row[i] - 2.0 * row[i + 1] + row[i + 2]));
    double corr = 0.5 * theta * (1.0 - theta) * d2;
    return lin + dir * corr;
}

}  // namespace

double BoundTable::wF_at(int level, double u) const {
    return read_row(wF[level], u_min, u_step, u, +1);
}

double BoundTable::wf_at(int level, double u) const {
    return std::max(0.0, read_row(wf[level], u_min, u_step, u, -1));
}

double BoundTable::wF_raw(int level, double u) const {
    return read_row(wF[level], u_min, u_step, u, 0);
}

double BoundTable::wf_raw(int level, double u) const {
    return read_row(wf[level], u_min, u_step, u, 0);
}

double BoundTable::wF_breve(double k, double u) const {
    BetaSplit s = beta_split(grid, k, grid.n);
    if (s.beta == 1.0 || s.k_lo == s.k_hi) {
        int l = static_cast<int>(std::lower_bound(grid.levels.begin(),
                                                  grid.levels.begin() + grid.n + 1, s.k_hi - 1e-13) -
                                 grid.levels.begin());
        return wF_at(l, u);
    }
    int hi = static_cast<int>(std::lower_bound(grid.levels.begin(),
                                               grid.levels.begin() + grid.n + 1, s.k_hi - 1e-13) -
                              grid.levels.begin());
    return s.beta * wF_at(hi, u) + (1.0 - s.beta) * wF_at(hi - 1, u);
}

double BoundTable::wf_breve(double k, double u) const {
    BetaSplit s = beta_split(grid, k, grid.n + 1);
    if (s.beta == 1.0 || s.k_lo == s.k_hi) {
        int l = static_cast<int>(std::lower_bound(grid.levels.begin(),
                                                  grid.levels.begin() + grid.n + 2, s.k_hi - 1e-13) -
                                 grid.levels.begin());
        return wf_at(l, u);
    }
    int hi = static_cast<int>(std::lower_bound(grid.levels.begin(),
                                               grid.levels.begin() + grid.n + 2, s.k_hi - 1e-13) -
                              grid.levels.begin());
    return s.beta * wf_at(hi, u) + (1.0 - s.beta) * wf_at(hi - 1, u);
}

std::string BoundTable::emit_csv() const {
    std::string out = "u,k,wF,wf\n";
    char buf[160];
    for (int i = u_count - 1; i >= 0; --i) {
        for (int l = levels_f() - 1; l >= 0; --l) {
            double u = u_at(i);
            double k = grid.levels[l];
            if (l <= grid.n) {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f\n", u, k,
                              wF[l][i], wf[l][i]);
            } else {
                std::snprintf(buf, sizeof(buf), "%.6f,%.6f,,%.6f\n", u, k, wf[l][i]);
            }
            out += buf;
        }
    }
    return out;
}

std::vector<CsvCell> parse_csv(const std::string& text) {
    std::vector<CsvCell> cells;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        CsvCell c{};
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        c.u = std::stod(field);
        std::getline(ls, field, ',');
        c.k = std::stod(field);
        std::getline(ls, field, ',');
        c.wF = field.empty() ? std::nan("") : std::stod(field);
        std::getline(ls, field, ',');
        c.wf = std::stod(field);
        cells.push_back(c);
    }
    return cells;
}

nlohmann::json BoundTable::to_json() const {
    nlohmann::json j;
    j["alpha"] = grid.alpha;
    j["n"] = grid.n;
    j["levels"] = grid.levels;
    std::vector<double> us(u_count);
    for (int i = 0; i < u_count; ++i) us[i] = u_at(i);
    j["u_samples"] = us;
    j["wF"] = wF;
    j["wf"] = wf;
    j["iteration_index"] = iteration_index;
    return j;
}

BoundTable BoundTable::from_json(const nlohmann::json& j) {
    BoundTable t;
    t.grid.alpha = j.at("alpha").get<double>();
    t.grid.n = j.at("n").get<int>();
    t.grid.levels = j.at("levels").get<std::vector<double>>();
    std::vector<double> us = j.at("u_samples").get<std::vector<double>>();
    if (us.size() < 2) throw std::invalid_argument("checkpoint: malformed u grid");
    t.u_min = us.front();
    t.u_step = us[1] - us[0];
    t.u_count = static_cast<int>(us.size());
    t.wF = j.at("wF").get<std::vector<std::vector<double>>>();
    t.wf = j.at("wf").get<std::vector<std::vector<double>>>();
    t.iteration_index = j.at("iteration_index").get<int>();
    t.flat_u.assign(t.wf.size(), 2.0);
    if (t.wF.size() != static_cast<size_t>(t.grid.n) + 1 ||
        t.wf.size() != static_cast<size_t>(t.grid.n) + 6)
        throw std::invalid_argument("checkpoint: row count mismatch");
    for (auto& row : t.wF)
        if (row.size() != static_cast<size_t>(t.u_count))
            throw std::invalid_argument("checkpoint: row length mismatch");
    return t;
}

void BoundTable::check_ordering(const char* where) const {
    for (int l = 0; l <= grid.n; ++l)
        for (int i = 0; i < u_count; ++i)
            if (wf[l][i] > wF[l][i] + 1e-9) {
                char msg[160];
                std::snprintf(msg, sizeof(msg),
                              "bound ordering violated (%s): k=%.4f u=%.4f wf=%.8f > wF=%.8f",
                              where, grid.levels[l], u_at(i), wf[l][i], wF[l][i]);
                throw std::logic_error(msg);
            }
}

}  // namespace xsieve
