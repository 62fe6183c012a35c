#include "stefan/config_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace stefan {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config key '" + key + "': cannot parse number '" + value + "'");
    return x;
}

long parse_int(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw std::invalid_argument("config key '" + key + "': cannot parse integer '" + value + "'");
    return x;
}

enum class Kind { Dbl, Time, Int, Mode };

struct KeySpec {
    const char* section;
    const char* key;
    Kind kind;
};

constexpr KeySpec kKeys[] = {
    {"material", "rho", Kind::Dbl},
    {"material", "cp", Kind::Dbl},
    {"material", "k", Kind::Dbl},
    {"material", "dH", Kind::Dbl},
    {"material", "Tm", Kind::Dbl},
    {"scenario", "D", Kind::Time},
    {"scenario", "deltaD", Kind::Time},
    {"scenario", "c", Kind::Dbl},
    {"scenario", "s_r", Kind::Dbl},
    {"scenario", "s0", Kind::Dbl},
    {"scenario", "Tbar", Kind::Dbl},
    {"scenario", "q_past", Kind::Dbl},
    {"scenario", "mode", Kind::Mode},
    {"numerics", "N", Kind::Int},
    {"numerics", "dt", Kind::Time},
    {"numerics", "horizon", Kind::Time},
    {"numerics", "z_points", Kind::Int},
    {"numerics", "diag_stride", Kind::Int},
    {"numerics", "csv_stride", Kind::Int},
    {"numerics", "snapshot_count", Kind::Int},
    {"monitors", "tol_qc", Kind::Dbl},
    {"monitors", "tol_T", Kind::Dbl},
    {"monitors", "tol_sdot", Kind::Dbl},
    {"monitors", "tol_swin", Kind::Dbl},
};

const KeySpec* find_key(const std::string& section, const std::string& key) {
    for (const auto& ks : kKeys) {
        if (key != ks.key) continue;
        if (!section.empty() && section != ks.section) continue;
        return &ks;
    }
    return nullptr;
}

// Returns true when a material constant changed and params need re-deriving.
bool set_value(ResolvedSetup& su, const KeySpec& ks, const std::string& value) {
    const std::string key = ks.key;
    double d = 0.0;
    long i = 0;
    switch (ks.kind) {
        case Kind::Dbl: d = parse_double(key, value); break;
        case Kind::Time: d = parse_time_seconds(value); break;
        case Kind::Int: i = parse_int(key, value); break;
        case Kind::Mode: {
            const std::string v = trim(value);
            if (v == "compensated") su.mode = ControlMode::Compensated;
            else if (v == "nominal") su.mode = ControlMode::Nominal;
            else throw std::invalid_argument("config key 'mode': expected 'compensated' or "
                                             "'nominal', got '" + value + "'");
            return false;
        }
    }

    ScenarioConfig& c = su.cfg;
    PhysicalParams& p = su.params;
    if (key == "rho") { p.rho = d; return true; }
    if (key == "cp") { p.cp = d; return true; }
    if (key == "k") { p.k = d; return true; }
    if (key == "dH") { p.dH = d; return true; }
    if (key == "Tm") { p.Tm = d; return true; }
    if (key == "D") c.D = d;
    else if (key == "deltaD") c.deltaD = d;
    else if (key == "c") c.c = d;
    else if (key == "s_r") c.s_r = d;
    else if (key == "s0") c.s0 = d;
    else if (key == "Tbar") c.Tbar = d;
    else if (key == "q_past") c.q_past = d;
    else if (key == "N") c.N = static_cast<int>(i);
    else if (key == "dt") c.dt = d;
    else if (key == "horizon") c.horizon = d;
    else if (key == "z_points") c.z_points = static_cast<int>(i);
    else if (key == "diag_stride") c.diag_stride = static_cast<int>(i);
    else if (key == "csv_stride") c.csv_stride = static_cast<int>(i);
    else if (key == "snapshot_count") c.snapshot_count = static_cast<int>(i);
    else if (key == "tol_qc") c.tol_qc = d;
    else if (key == "tol_T") c.tol_T = d;
    else if (key == "tol_sdot") c.tol_sdot = d;
    else if (key == "tol_swin") c.tol_swin = d;
    return false;
}

void rederive(ResolvedSetup& su) {
    su.params = derive_params(su.params.rho, su.params.cp, su.params.k, su.params.dH,
                              su.params.Tm);
}

std::string strip_comment(const std::string& line) {
    for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] == '#' || line[i] == ';') return line.substr(0, i);
    return line;
}

}  // namespace

double parse_time_seconds(const std::string& text) {
    const std::string v = trim(text);
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str())
        throw std::invalid_argument("cannot parse time value '" + text + "'");
    std::string suffix = trim(end);
    if (suffix.empty() || suffix == "s" || suffix == "sec") return x;
    if (suffix == "min") return 60.0 * x;
    throw std::invalid_argument("unknown time suffix '" + suffix + "' in '" + text + "'");
}

ResolvedSetup setup_from_preset(const Preset& p) {
    return ResolvedSetup{p.params, p.cfg, p.mode};
}

void apply_config_text(ResolvedSetup& setup, const std::string& text) {
    std::string section;
    bool material_changed = false;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;

        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "material" && section != "scenario" && section != "numerics" &&
                section != "monitors")
                throw std::invalid_argument("unknown config section '[" + section + "]'");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const KeySpec* ks = find_key(section, key);
        if (!ks)
            throw std::invalid_argument("unknown config key '" + key + "'" +
                                        (section.empty() ? "" : " in section [" + section + "]"));
        material_changed = set_value(setup, *ks, value) || material_changed;
    }
    if (material_changed) rederive(setup);
}

void apply_override(ResolvedSetup& setup, const std::string& key, const std::string& value) {
    std::string section, bare = trim(key);
    const std::size_t dot = bare.find('.');
    if (dot != std::string::npos) {
        section = bare.substr(0, dot);
        bare = bare.substr(dot + 1);
    }
    const KeySpec* ks = find_key(section, bare);
    if (!ks) throw std::invalid_argument("unknown config key '" + key + "'");
    if (set_value(setup, *ks, value)) rederive(setup);
}

void apply_override_expr(ResolvedSetup& setup, const std::string& expr) {
    const std::size_t eq = expr.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override must be key=value, got '" + expr + "'");
    apply_override(setup, trim(expr.substr(0, eq)), trim(expr.substr(eq + 1)));
}

std::string serialize_setup(const ResolvedSetup& setup) {
    const PhysicalParams& p = setup.params;
    const ScenarioConfig& c = setup.cfg;
    char buf[4096];
    std::snprintf(
        buf, sizeof buf,
        "[material]\n"
        "rho = %.17g\ncp = %.17g\nk = %.17g\ndH = %.17g\nTm = %.17g\n"
        "\n[scenario]\n"
        "D = %.17g\ndeltaD = %.17g\nc = %.17g\ns_r = %.17g\ns0 = %.17g\n"
        "Tbar = %.17g\nq_past = %.17g\nmode = %s\n"
        "\n[numerics]\n"
        "N = %d\ndt = %.17g\nhorizon = %.17g\nz_points = %d\n"
        "diag_stride = %d\ncsv_stride = %d\nsnapshot_count = %d\n"
        "\n[monitors]\n"
        "tol_qc = %.17g\ntol_T = %.17g\ntol_sdot = %.17g\ntol_swin = %.17g\n",
        p.rho, p.cp, p.k, p.dH, p.Tm, c.D, c.deltaD, c.c, c.s_r, c.s0, c.Tbar, c.q_past,
        setup.mode == ControlMode::Compensated ? "compensated" : "nominal", c.N, c.dt,
        c.horizon, c.z_points, c.diag_stride, c.csv_stride, c.snapshot_count, c.tol_qc,
        c.tol_T, c.tol_sdot, c.tol_swin);
    return buf;
}

}  // namespace stefan
