#include "hd/cli/presets.hpp"

#include "hd/errors.hpp"

namespace hd::cli {

namespace {

using Col = std::array<double, 4>;

struct RawRow {
    int orbital;
    int n_row;
    std::vector<Col> reference;
    std::optional<Col> reference_w2;
};

// Pseudospin rows are labelled (n_row, -l~) and (n_row - 1, l~ + 1).
TableRow pseudospin_row(const RawRow& raw, int n_state, const char* convention)
{
    TableRow row;
    row.orbital = raw.orbital;
    row.n_row = raw.n_row;
    row.negative = {raw.n_row, -raw.orbital};
    row.positive = {raw.n_row - 1, raw.orbital + 1};
    row.state = {n_state, raw.orbital + 1};
    row.convention = convention;
    row.reference = raw.reference;
    row.reference_w2 = raw.reference_w2;
    return row;
}

// Spin rows are labelled (n, -(l+1)) and (n, l).
TableRow spin_row(const RawRow& raw)
{
    TableRow row;
    row.orbital = raw.orbital;
    row.n_row = raw.n_row;
    row.negative = {raw.n_row, -(raw.orbital + 1)};
    row.positive = {raw.n_row, raw.orbital};
    row.state = row.positive;
    row.convention = "kappa-positive";
    row.reference = raw.reference;
    return row;
}

TablePreset make_t1()
{
    const std::vector<RawRow> raw = {
        {1, 1, {{0.0972235, 0.0561798, -0.0302923, -0.1544010}}, Col{0.0963638, 0.0425738, -0.0710009, -0.2346580}},
        {1, 2, {{0.0938034, 0.0038600, -0.1758970, -0.4125570}}, Col{0.0928939, -0.0103694, -0.2174930, -0.4920870}},
        {2, 1, {{0.0937343, 0.00275013, -0.1793260, -0.4196540}}, Col{0.0912282, -0.0363590, -0.2930130, -0.6351320}},
        {2, 2, {{0.0889591, -0.0673920, -0.3590490, -0.7041020}}, Col{0.0863238, -0.1078600, -0.4732160, -0.9131390}},
        {3, 1, {{0.0888560, -0.0690512, -0.3642070, -0.7148860}}, Col{0.0839128, -0.1447100, -0.5760950, -1.0984500}},
        {3, 2, {{0.0827390, -0.1542610, -0.5611560, -0.9872420}}, Col{0.0775818, -0.2316110, -0.7705370, -1.3540100}},
        {4, 1, {{0.0826019, -0.1564720, -0.5680850, -1.0019200}}, Col{0.0744360, -0.2784550, -0.8953110, -1.5671200}},
        {4, 2, {{0.0751593, -0.2536460, -0.7673870, -1.2384300}}, Col{0.0666955, -0.3771030, -1.0870200, -1.7758200}},
    };
    TablePreset t;
    t.id = TableId::T1;
    t.params = {5.0, 0.1, 3.4, -4.9, Symmetry::Pseudospin};
    t.schemes = {SchemeConfig::improved()};
    for (const auto& r : raw)
        t.rows.push_back(pseudospin_row(r, r.n_row - 1, "partner"));
    return t;
}

TablePreset make_t2()
{
    const std::vector<RawRow> raw = {
        {1, 0, {{-0.0942003, -0.00840935, 0.1727090, 0.4336300}, {-0.0995915, -0.0935025, -0.0803626, -0.0607447}}, {}},
        {1, 1, {{-0.0869848, 0.1022580, 0.4825270, 0.9884020}, {-0.0989452, -0.0833617, -0.0506572, -0.00443345}}, {}},
        {2, 0, {{-0.0869533, 0.1027630, 0.4840740, 0.9915680}, {-0.0984295, -0.0750704, -0.0249639, 0.0491605}}, {}},
        {2, 1, {{-0.0768780, 0.2514980, 0.8697760, 1.6152900}, {-0.0974023, -0.0590862, 0.0210900, 0.1346870}}, {}},
        {3, 0, {{-0.0768308, 0.2522540, 0.8720970, 1.6200500}, {-0.0970491, -0.0534195, 0.0385481, 0.1706690}}, {}},
        {3, 1, {{-0.0639221, 0.4335670, 1.3001200, 2.2370300}, {-0.0956585, -0.0320936, 0.0980973, 0.2762140}}, {}},
        {4, 0, {{-0.0638592, 0.4345750, 1.3032300, 2.2434000}, {-0.0952974, -0.0262998, 0.1159560, 0.3130470}}, {}},
        {4, 1, {{-0.0481507, 0.6422870, 1.7441400, 2.8076500}, {-0.0935402, 0.000171676, 0.1871360, 0.4324460}}, {}},
    };
    TablePreset t;
    t.id = TableId::T2;
    t.params = {5.0, 0.1, 3.4, 4.9, Symmetry::Spin};
    t.schemes = {SchemeConfig::improved(), SchemeConfig::proper_r1()};
    for (const auto& r : raw)
        t.rows.push_back(spin_row(r));
    return t;
}

TablePreset make_t4()
{
    const std::vector<RawRow> raw = {
        {1, 1, {{4.98403, 4.75186, 4.28511, 3.66359}, {4.99611, 4.93821, 4.81377, 4.62906}}, {}},
        {1, 2, {{4.97167, 4.56926, 3.81106, 2.89559}, {4.99376, 4.90141, 4.70660, 4.426637}}, {}},
        {2, 1, {{4.97165, 4.56885, 3.80980, 2.89301}, {4.99270, 4.88469, 4.65663, 4.32792}}, {}},
        {2, 2, {{4.95580, 4.34617, 3.28315, 2.13127}, {4.98965, 4.83772, 4.52424, 4.08931}}, {}},
        {3, 1, {{4.95577, 4.34556, 3.28126, 2.12740}, {4.98821, 4.81515, 4.45771, 3.96084}}, {}},
        {3, 2, {{4.93649, 4.09036, 2.73792, 1.42801}, {4.98446, 4.75851, 4.30443, 3.70026}}, {}},
        {4, 1, {{4.93644, 4.08954, 2.73540, 1.42282}, {4.98265, 4.73030, 4.22266, 3.54589}}, {}},
        {4, 2, {{4.91377, 3.80963, 2.20283, 0.81097}, {4.97820, 4.66464, 4.05329, 3.27673}}, {}},
    };
    TablePreset t;
    t.id = TableId::T4;
    t.params = {5.0, 0.1, 3.4, 0.0, Symmetry::Pseudospin};
    t.schemes = {SchemeConfig::improved(), SchemeConfig::proper_r1()};
    for (const auto& r : raw)
        t.rows.push_back(pseudospin_row(r, r.n_row, "row-n"));
    return t;
}

TablePreset make_t5()
{
    const std::vector<RawRow> raw = {
        {1, 0, {{-4.98993, -4.84099, -4.52642, -4.07294}, {-4.99731, -4.95718, -4.86979, -4.73717}}, {}},
        {1, 1, {{-4.97738, -4.64843, -3.98679, -3.10497}, {-4.99375, -4.90078, -4.70098, -4.40441}}, {}},
        {2, 0, {{-4.97737, -4.64815, -3.98590, -3.10317}, {-4.99356, -4.89773, -4.69175, -4.38588}}, {}},
        {2, 1, {{-4.95984, -4.38924, -3.31306, -2.01110}, {-4.98857, -4.81949, -4.46248, -3.94799}}, {}},
        {3, 0, {{-4.95982, -4.38880, -3.31174, -2.00840}, {-4.98847, -4.81796, -4.45782, -3.93859}}, {}},
        {3, 1, {{-4.93736, -4.07298, -2.56340, -0.92240}, {-4.98205, -4.71859, -4.17448, -3.41830}}, {}},
        {4, 0, {{-4.93733, -4.07241, -2.56164, -0.91879}, {-4.98196, -4.71713, -4.17002, -3.40926}}, {}},
        {4, 1, {{-4.91001, -3.71030, -1.78844, 0.082117}, {-4.97411, -4.59756, -3.84019, -2.83080}}, {}},
    };
    TablePreset t;
    t.id = TableId::T5;
    t.params = {5.0, 0.1, 3.4, 0.0, Symmetry::Spin};
    t.schemes = {SchemeConfig::improved(), SchemeConfig::proper_r1()};
    for (const auto& r : raw)
        t.rows.push_back(spin_row(r));
    return t;
}

} // namespace

TableId parse_table_id(const std::string& text)
{
    if (text == "t1")
        return TableId::T1;
    if (text == "t2")
        return TableId::T2;
    if (text == "t4")
        return TableId::T4;
    if (text == "t5")
        return TableId::T5;
    throw DomainError("unknown table '" + text + "' (expected t1, t2, t4 or t5)");
}

std::string to_string(TableId id)
{
    switch (id) {
    case TableId::T1: return "t1";
    case TableId::T2: return "t2";
    case TableId::T4: return "t4";
    case TableId::T5: return "t5";
    }
    return "?";
}

std::string TableRow::doublet_label(Symmetry symmetry) const
{
    // Spin rows list the kappa > 0 member first, pseudospin rows the kappa < 0 member.
    const QuantumState& first = symmetry == Symmetry::Spin ? positive : negative;
    const QuantumState& second = symmetry == Symmetry::Spin ? negative : positive;
    return "(" + spectroscopic_label(first, symmetry) + "," + spectroscopic_label(second, symmetry) + ")";
}

const TablePreset& table_preset(TableId id)
{
    static const TablePreset t1 = make_t1();
    static const TablePreset t2 = make_t2();
    static const TablePreset t4 = make_t4();
    static const TablePreset t5 = make_t5();
    switch (id) {
    case TableId::T1: return t1;
    case TableId::T2: return t2;
    case TableId::T4: return t4;
    case TableId::T5: return t5;
    }
    throw DomainError("unknown table id");
}

} // namespace hd::cli
