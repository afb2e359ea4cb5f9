#include "xsieve/paper_tables.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace xsieve {

namespace {

constexpr double kNA = -1.0;  // marks an absent upper cell

struct RowSpec {
    double k;
    double F[5];  // u = 3, 2.5, 2, 1.5, 1
    double f[5];
};

std::vector<PaperCell> expand(const RowSpec* rows, size_t count) {
    static const double us[5] = {3.0, 2.5, 2.0, 1.5, 1.0};
    std::vector<PaperCell> cells;
    for (size_t r = 0; r < count; ++r) {
        for (int j = 0; j < 5; ++j) {
            if (rows[r].F[j] != kNA) cells.push_back({us[j], rows[r].k, 'F', rows[r].F[j]});
            cells.push_back({us[j], rows[r].k, 'f', rows[r].f[j]});
        }
    }
    return cells;
}

std::vector<PaperCell> expand_zero_row(const double (*rows)[3], size_t count) {
    std::vector<PaperCell> cells;
    for (size_t r = 0; r < count; ++r) {
        cells.push_back({rows[r][0], 0.0, 'F', rows[r][1]});
        cells.push_back({rows[r][0], 0.0, 'f', rows[r][2]});
    }
    return cells;
}

const RowSpec kTable1[] = {
    {4.50, {kNA, kNA, kNA, kNA, kNA}, {1.96635, 1.67752, 1.28813, 0.70587, 0}},
    {4.00, {2.15054, 2.02792, 1.99927, 3.48815, 7.74209}, {1.95519, 1.66557, 1.27638, 0.63944, 0}},
    {3.75, {2.12684, 2.00342, 1.97867, 3.25499, 7.24307}, {1.94961, 1.65960, 1.27052, 0.60623, 0}},
    {3.50, {2.10295, 1.97861, 1.95809, 3.02183, 6.67440}, {1.91658, 1.61773, 1.22884, 0.56581, 0}},
    {3.25, {2.08865, 1.96646, 1.94637, 2.79741, 6.25374}, {1.88156, 1.56967, 1.18084, 0.52540, 0}},
    {3.00, {2.07414, 1.95397, 1.93465, 2.57543, 5.76573}, {1.84654, 1.51728, 1.12785, 0.48498, 0}},
    {2.75, {2.06162, 1.94537, 1.92659, 2.35346, 5.27772}, {1.81152, 1.46425, 1.06885, 0.44457, 0}},
    {2.50, {2.04885, 1.93640, 1.91853, 2.13149, 4.78970}, {1.77650, 1.41122, 1.00295, 0.40415, 0}},
    {2.25, {2.03817, 1.93415, 1.91807, 1.91837, 4.31075}, {1.74147, 1.35820, 0.92819, 0.36374, 0}},
    {2.00, {2.02748, 1.93190, 1.91761, 1.91761, 3.83178}, {1.70645, 1.30516, 0.84215, 0.32332, 0}},
    {1.75, {2.01680, 1.92965, 1.91714, 1.91714, 3.35282}, {1.67143, 1.25213, 0.75020, 0.28290, 0}},
    {1.50, {2.00611, 1.92740, 1.91668, 1.91668, 2.87389}, {1.63641, 1.19910, 0.65825, 0.24249, 0}},
    {1.25, {1.99543, 1.92515, 1.91622, 1.91622, 2.39495}, {1.60138, 1.14607, 0.56629, 0.20207, 0}},
    {1.00, {1.98475, 1.92290, 1.91576, 1.91576, 1.91602}, {1.56637, 1.09305, 0.47434, 0.16166, 0}},
    {0.75, {1.97406, 1.92065, 1.91529, 1.91529, 1.91529}, {1.53134, 1.04002, 0.38198, 0.12125, 0}},
    {0.50, {1.96338, 1.91840, 1.91483, 1.91483, 1.91483}, {1.49632, 0.98699, 0.28962, 0.08083, 0}},
    {0.25, {1.95269, 1.91615, 1.91437, 1.91437, 1.91437}, {1.46130, 0.93396, 0.19726, 0.04041, 0}},
    {0.00, {1.94201, 1.91390, 1.91390, 1.91390, 1.91390}, {1.42628, 0.88809, 0.10490, 0, 0}},
};

const RowSpec kTable2[] = {
    {4.50, {kNA, kNA, kNA, kNA, kNA}, {1.97453, 1.68857, 1.30463, 0.72792, 0}},
    {4.00, {2.14267, 2.01741, 1.99419, 3.45385, 7.62429}, {1.96384, 1.67727, 1.29362, 0.66592, 0}},
    {3.75, {2.11819, 1.99171, 1.96864, 3.22027, 7.13005}, {1.95849, 1.67161, 1.28812, 0.63491, 0}},
    {3.50, {2.093361, 1.96583, 1.943359, 2.98668, 6.63582}, {1.92817, 1.63301, 1.24989, 0.59687, 0}},
    {3.25, {2.07708, 1.95059, 1.92889, 2.76343, 6.15192}, {1.89786, 1.59028, 1.20735, 0.55452, 0}},
    {3.00, {2.06046, 1.93519, 1.91420, 2.54245, 5.67028}, {1.86754, 1.54486, 1.15984, 0.51186, 0}},
    {2.75, {2.04534, 1.92323, 1.90294, 2.32147, 5.18865}, {1.83723, 1.49944, 1.10631, 0.46921, 0}},
    {2.50, {2.03013, 1.91113, 1.89168, 2.10049, 4.70702}, {1.80691, 1.45402, 1.04593, 0.42655, 0}},
    {2.25, {2.01723, 1.90779, 1.89018, 1.89044, 4.23630}, {1.77660, 1.40859, 0.97690, 0.38390, 0}},
    {2.00, {2.00432, 1.90445, 1.88868, 1.88868, 3.76557}, {1.74628, 1.36317, 0.89681, 0.34124, 0}},
    {1.75, {1.99142, 1.90111, 1.88718, 1.87180, 3.29484}, {1.71596, 1.31775, 0.81618, 0.29859, 0}},
    {1.50, {1.97851, 1.89777, 1.88569, 1.88569, 2.82414}, {1.68565, 1.27233, 0.73558, 0.25593, 0}},
    {1.25, {1.96851, 1.89443, 1.88419, 1.88419, 2.35343}, {1.65533, 1.22690, 0.665493, 0.21327, 0}},
    {1.00, {1.95270, 1.89108, 1.88269, 1.88269, 1.88273}, {1.62502, 1.18148, 0.57430, 0.17062, 0}},
    {0.75, {1.93980, 1.88774, 1.88119, 1.88119, 1.88119}, {1.59470, 1.13606, 0.49044, 0.12796, 0}},
    {0.50, {1.92689, 1.88440, 1.87969, 1.87969, 1.87969}, {1.56439, 1.09064, 0.40658, 0.08531, 0}},
    {0.25, {1.91399, 1.88106, 1.87820, 1.87820, 1.87820}, {1.53407, 1.04522, 0.32272, 0.04265, 0}},
    {0.00, {1.90109, 1.87772, 1.87670, 1.87670, 1.87670}, {1.50375, 0.99979, 0.23886, 0, 0}},
};

const RowSpec kTable4[] = {
    {4.50, {kNA, kNA, kNA, kNA, kNA}, {1.98678, 1.72368, 1.45786, 0.87942, 0}},
    {4.00, {2.12780, 1.97904, 1.92609, 3.45385, 7.62429}, {1.98678, 1.72368, 1.45786, 0.87942, 0}},
    {3.75, {2.08345, 1.91941, 1.88222, 2.66467, 3.883690}, {1.98678, 1.72368, 1.45787, 0.87942, 0}},
    {3.50, {2.06380, 1.89666, 1.83588, 2.50990, 3.69096}, {1.95927, 1.68620, 1.43309, 0.87942, 0}},
    {3.25, {2.04590, 1.87680, 1.80742, 2.35513, 3.49502}, {1.93176, 1.64872, 1.39642, 0.87942, 0}},
    {3.00, {2.02717, 1.85984, 1.78239, 2.20035, 3.29908}, {1.90425, 1.61124, 1.33625, 0.87942, 0}},
    {2.75, {2.00935, 1.84315, 1.76010, 2.04558, 3.10314}, {1.87674, 1.57376, 1.27608, 0.87942, 0}},
    {2.50, {1.99910, 1.82406, 1.74140, 1.89080, 2.90720}, {1.84923, 1.53628, 1.21591, 0.87942, 0}},
    {2.25, {1.97322, 1.81642, 1.73603, 1.73603, 2.71126}, {1.82172, 1.49881, 1.15574, 0.87942, 0}},
    {2.00, {1.95545, 1.80879, 1.73420, 1.73420, 2.51532}, {1.79421, 1.46133, 1.09557, 0.78174, 0}},
    {1.75, {1.93768, 1.80115, 1.73354, 1.73354, 2.31938}, {1.76670, 1.42385, 1.03540, 0.68402, 0}},
    {1.50, {1.91990, 1.79351, 1.73288, 1.73288, 2.12343}, {1.73919, 1.38638, 0.97523, 0.58630, 0}},
    {1.25, {1.90213, 1.78587, 1.73221, 1.73221, 1.92749}, {1.71168, 1.34889, 0.91506, 0.48859, 0}},
    {1.00, {1.88436, 1.77823, 1.73155, 1.73155, 1.73155}, {1.68417, 1.31142, 0.85489, 0.39087, 0}},
    {0.75, {1.86659, 1.77059, 1.73089, 1.73089, 1.73089}, {1.65666, 1.27394, 0.79471, 0.29315, 0}},
    {0.50, {1.84882, 1.76295, 1.73023, 1.73023, 1.73023}, {1.62915, 1.23646, 0.73454, 0.19543, 0}},
    {0.25, {1.83104, 1.75531, 1.72957, 1.72957, 1.72957}, {1.60164, 1.19898, 0.67437, 0.09771, 0}},
    {0.00, {1.81327, 1.74767, 1.72891, 1.72891, 1.72891}, {1.57413, 1.16150, 0.61420, 0, 0}},
};

const double kTable3[][3] = {
    {5.0, 2.810476, 2.804123}, {4.9, 2.755139, 2.747114}, {4.8, 2.700062, 2.689884},
    {4.7, 2.645264, 2.632382}, {4.6, 2.590828, 2.574554}, {4.5, 2.536905, 2.516300},
    {4.4, 2.483362, 2.457531}, {4.3, 2.430558, 2.398088}, {4.2, 2.378490, 2.337796},
    {4.1, 2.327326, 2.276432}, {4.0, 2.276645, 2.217810}, {3.9, 2.227293, 2.153511},
    {3.8, 2.179677, 2.087060}, {3.7, 2.133011, 2.022424}, {3.6, 2.088863, 1.951076},
    {3.5, 2.046887, 1.885336}, {3.4, 2.008704, 1.808683}, {3.3, 1.974608, 1.728772},
    {3.2, 1.945059, 1.655096}, {3.1, 1.921803, 1.567792}, {3.0, 1.901086, 1.503759},
    {2.9, 1.893859, 1.407497}, {2.8, 1.893647, 1.306029}, {2.7, 1.892139, 1.226451},
    {2.6, 1.887881, 1.112676}, {2.5, 1.877724, 0.999797}, {2.4, 1.877724, 0.870318},
    {2.3, 1.877175, 0.731240}, {2.2, 1.876697, 0.581023}, {2.1, 1.876697, 0.417728},
    {2.0, 1.876697, 0.238863}, {1.9, 1.876697, 0.041132}, {1.8, 1.876697, 0.0},
};

const double kTable5[][3] = {
    {5.0, 2.808880, 2.805636},  {4.9, 2.753155, 2.749037}, {4.8, 2.697544, 2.692357},
    {4.7, 2.642076, 2.635561},  {4.6, 2.586792, 2.578614}, {4.5, 2.531744, 2.521477},
    {4.4, 2.476986, 2.464103},  {4.3, 2.422583, 2.406434}, {4.2, 2.368612, 2.348405},
    {4.1, 2.315164, 2.289931},  {4.0, 2.262342, 2.230915}, {3.9, 2.210264, 2.171225},
    {3.8, 2.159074, 2.110724},  {3.7, 2.108948, 2.049196}, {3.6, 2.060095, 1.986305},
    {3.5, 2.012771, 1.921903},  {3.4, 1.967290, 1.856157}, {3.3, 1.924047, 1.788645},
    {3.2, 1.883539, 1.719210},  {3.1, 1.846355, 1.647753}, {3.0, 1.813272, 1.574131},
    {2.9, 1.786400, 1.498156},  {2.8, 1.768490, 1.419319}, {2.7, 1.761952, 1.337257},
    {2.6, 1.761952, 1.251518},  {2.5, 1.747668, 1.161508}, {2.4, 1.747668, 1.081561},
    {2.3, 1.747668, 0.981977},  {2.2, 1.746616, 0.875651}, {2.1, 1.740615, 0.761280},
    {2.0, 1.728908, 0.637005},  {1.9, 1.728908, 0.459369}, {1.8, 1.728908, 0.260835},
    {1.702, 1.728908, 0.0024275}, {1.6, 1.728908, 0.0},    {1.5, 1.728908, 0.0},
    {1.4, 1.728908, 0.0},       {1.3, 1.728908, 0.0},      {1.2, 1.728908, 0.0},
};

template <typename T, size_t N>
constexpr size_t array_len(const T (&)[N]) {
    return N;
}

}  // namespace

const std::vector<PaperCell>& paper_table1() {
    static const std::vector<PaperCell> cells = expand(kTable1, array_len(kTable1));
    return cells;
}
const std::vector<PaperCell>& paper_table2() {
    static const std::vector<PaperCell> cells = expand(kTable2, array_len(kTable2));
    return cells;
}
const std::vector<PaperCell>& paper_table4() {
    static const std::vector<PaperCell> cells = expand(kTable4, array_len(kTable4));
    return cells;
}
const std::vector<PaperCell>& paper_table3() {
    static const std::vector<PaperCell> cells = expand_zero_row(kTable3, array_len(kTable3));
    return cells;
}
const std::vector<PaperCell>& paper_table5() {
    static const std::vector<PaperCell> cells = expand_zero_row(kTable5, array_len(kTable5));
    return cells;
}

double emitted_wF(const BoundTable& t, int level, double u) {
    double k = t.grid.levels[level];
    double threshold = std::pow(k, 1.0 / t.grid.alpha);
    if (k > 0.0 && u < threshold) {
        double scale = k / std::pow(u, t.grid.alpha);
        return scale * t.wF_raw(level, threshold);
    }
    return t.wF_raw(level, u);
}

DeviationReport compare_to_paper(const BoundTable& t, const std::vector<PaperCell>& cells,
                                 const std::string& name, double tol) {
    DeviationReport rep;
    rep.name = name;
    rep.tolerance = tol;
    for (const PaperCell& c : cells) {
        int level = -1;
        for (int l = 0; l < t.levels_f(); ++l)
            if (std::fabs(t.grid.levels[l] - c.k) < 1e-9) {
                level = l;
                break;
            }
        if (level < 0 || (c.kind == 'F' && level > t.grid.n)) continue;
        double computed = c.kind == 'F' ? emitted_wF(t, level, c.u) : t.wf_raw(level, c.u);
        rep.total++;
        double delta = computed - c.value;
        if (std::fabs(delta) <= tol)
            rep.within++;
        else
            rep.deviations.push_back({c.u, c.k, c.kind, c.value, computed, delta});
    }
    return rep;
}

std::string emit_zero_row_csv(const BoundTable& t, double lo, double hi, double step) {
    std::string out = "u,k,wF,wf\n";
    char buf[120];
    for (double u = hi; u > lo - 1e-9; u -= step) {
        std::snprintf(buf, sizeof(buf), "%.6f,0.000000,%.6f,%.6f\n", u, t.wF_raw(0, u),
                      t.wf_raw(0, u));
        out += buf;
    }
    return out;
}

nlohmann::json DeviationReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["tolerance"] = tolerance;
    j["total"] = total;
    j["within"] = within;
    j["fraction_within"] = fraction_within();
    nlohmann::json devs = nlohmann::json::array();
    for (const Deviation& d : deviations) {
        nlohmann::json e;
        e["u"] = d.u;
        e["k"] = d.k;
        e["kind"] = std::string(1, d.kind);
        e["paper"] = d.paper;
        e["computed"] = d.computed;
        e["delta"] = d.delta;
        devs.push_back(e);
    }
    j["deviations"] = devs;
    return j;
}

}  // namespace xsieve
