#include "gl2/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace gl2 {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char c) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == c) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

SectionMap parse_sections(const std::string& text) {
    SectionMap sm;
    std::string section = "general";
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(lineno) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        sm[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return sm;
}

struct Getter {
    const SectionMap& sm;

    const std::string* find(const std::string& sec, const std::string& key) const {
        auto s = sm.find(sec);
        if (s == sm.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        return &k->second;
    }
    double num(const std::string& sec, const std::string& key, double dflt) const {
        const std::string* v = find(sec, key);
        return v ? std::stod(*v) : dflt;
    }
    long integer(const std::string& sec, const std::string& key, long dflt) const {
        const std::string* v = find(sec, key);
        return v ? std::stol(*v) : dflt;
    }
    std::vector<double> list(const std::string& sec, const std::string& key,
                             std::vector<double> dflt) const {
        const std::string* v = find(sec, key);
        if (!v) return dflt;
        std::vector<double> out;
        for (const auto& t : split_ws(*v)) out.push_back(std::stod(t));
        return out;
    }
};

std::vector<std::pair<double, double>> parse_pairs(const std::string& v) {
    // tokens of the form (a,b), whitespace-separated
    std::vector<std::pair<double, double>> out;
    std::string cur;
    for (char ch : v) {
        if (ch == '(') {
            cur.clear();
        } else if (ch == ')') {
            const auto parts = split_on(cur, ',');
            if (parts.size() != 2) throw ConfigError("ts pair needs the form (t,s)");
            out.emplace_back(std::stod(parts[0]), std::stod(parts[1]));
        } else {
            cur += ch;
        }
    }
    if (out.empty()) throw ConfigError("empty ts pair list");
    return out;
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

}  // namespace

Cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ConfigError("empty complex literal");
    if (s.back() != 'i' && s.back() != 'I') return {std::stod(s), 0.0};
    s.pop_back();  // drop the trailing i
    // find the split between the real part and the imaginary coefficient
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto im_of = [](const std::string& t) -> double {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (split == std::string::npos) return {0.0, im_of(s)};
    return {std::stod(s.substr(0, split)), im_of(s.substr(split))};
}

std::string format_complex(Cplx z) {
    std::ostringstream os;
    os.precision(17);
    if (z.imag() == 0.0) {
        os << z.real();
    } else if (z.real() == 0.0) {
        os << z.imag() << "i";
    } else {
        os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
    }
    return os.str();
}

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.test_functions = {
        {MatrixPoint::identity(), {0.2, 0.2, 0.2, 0.2}},
        {MatrixPoint::diag(-1.0, 1.0), {0.2, 0.2, 0.2, 0.2}},
    };
    c.mu_samples = {
        {{0.3, 0.7}, {-0.2, -0.1}},
        {{0.0, 1.0}, {0.0, -1.0}},
        {{1.1, 0.0}, {0.0, 0.0}},
    };
    c.sigma_samples = {{0.0, 0.6}};
    c.parities = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    c.ko_t = {-1.4, -0.7, 0.1, 0.8, 1.5};
    c.mt_ts = {{0.35, 0.2}, {-0.6, -0.75}, {-0.5, 0.4}, {0.5, -0.6}};
    c.lm_ts = {{0.6, 0.45}, {0.3, -0.2}};
    c.lie_t = {-0.9, 0.3, 1.2};
    c.iw_mu = {
        {{-0.25, 0.0}, {0.25, 0.0}},
        {{-0.75, 0.15}, {0.75, -0.15}},
    };
    c.iw_t = {-0.4, 0.5};
    return c;
}

void SuiteConfig::apply_fast() {
    fast = true;
    kernel_order = 12;
    oracle_kernel_order = 10;
    direct_order = 8;
    oracle_s_order = 8;
    qmc_points = 1L << 14;
    auto head = [](std::vector<double>& v) {
        if (v.size() > 1) v.resize(1);
    };
    if (ko_t.size() > 1) ko_t = {ko_t[ko_t.size() / 2]};
    if (mt_ts.size() > 2) mt_ts.resize(2);
    if (lm_ts.size() > 1) lm_ts.resize(1);
    head(lie_t);
    head(iw_t);
    if (mu_samples.size() > 1) mu_samples.resize(1);
    if (parities.size() > 2) parities.resize(2);
    // fast runs are smoke runs; only the tolerances that reduced orders
    // cannot reach are relaxed
    tol_main = 1e-5;
    tol_main_diag = 1e-6;
    tol_lemmas = 1e-7;
    density_grid_points = 21;
}

SuiteConfig SuiteConfig::parse(const std::string& text) {
    const SectionMap sm = parse_sections(text);
    const Getter g{sm};
    SuiteConfig c = defaults();

    c.seed = std::uint64_t(g.integer("general", "seed", long(c.seed)));
    c.threads = int(g.integer("general", "threads", c.threads));
    c.t_max = g.num("window", "t_max", c.t_max);

    // test functions: sections test_function.N with center/radii rows
    std::vector<TestFnDesc> fns;
    for (int n = 1;; ++n) {
        const std::string sec = "test_function." + std::to_string(n);
        const std::string* ctr = g.find(sec, "center");
        if (!ctr) break;
        const auto cv = split_ws(*ctr);
        const auto rv = split_ws(g.find(sec, "radii") ? *g.find(sec, "radii") : "");
        if (cv.size() != 4 || rv.size() != 4)
            throw ConfigError(sec + ": center and radii need 4 entries each");
        TestFnDesc d;
        d.center = {std::stod(cv[0]), std::stod(cv[1]), std::stod(cv[2]), std::stod(cv[3])};
        for (int i = 0; i < 4; ++i) d.radii[size_t(i)] = std::stod(rv[size_t(i)]);
        fns.push_back(d);
    }
    if (!fns.empty()) c.test_functions = fns;

    c.section_center = g.num("section", "center", c.section_center);
    c.section_halfwidth = g.num("section", "halfwidth", c.section_halfwidth);

    std::vector<MuSample> mus;
    for (int n = 1;; ++n) {
        const std::string* v = g.find("mu", "sample." + std::to_string(n));
        if (!v) break;
        const auto parts = split_on(*v, ';');
        if (parts.size() != 2) throw ConfigError("mu sample needs 'mu1 ; mu2'");
        mus.push_back({parse_complex(parts[0]), parse_complex(parts[1])});
    }
    if (!mus.empty()) c.mu_samples = mus;

    if (const std::string* v = g.find("sigma", "samples")) {
        c.sigma_samples.clear();
        for (const auto& tok : split_ws(*v)) c.sigma_samples.push_back(parse_complex(tok));
    }
    if (const std::string* v = g.find("parities", "classes")) {
        c.parities.clear();
        for (const auto& tok : split_ws(*v)) {
            if (tok.size() != 2) throw ConfigError("parity class must be two digits, e.g. 10");
            c.parities.emplace_back(tok[0] - '0', tok[1] - '0');
        }
    }

    c.kernel_order = int(g.integer("quadrature", "kernel_order", c.kernel_order));
    c.oracle_kernel_order = int(g.integer("quadrature", "oracle_kernel_order", c.oracle_kernel_order));
    c.kernel_panels = int(g.integer("quadrature", "kernel_panels", c.kernel_panels));
    c.direct_order = int(g.integer("quadrature", "direct_order", c.direct_order));
    c.direct_panels = int(g.integer("quadrature", "direct_panels", c.direct_panels));
    c.oracle_s_order = int(g.integer("quadrature", "oracle_s_order", c.oracle_s_order));
    c.oracle_s_panels = int(g.integer("quadrature", "oracle_s_panels", c.oracle_s_panels));
    c.singular_order = int(g.integer("quadrature", "singular_order", c.singular_order));
    c.qmc_points = g.integer("qmc", "points", c.qmc_points);
    c.qmc_replicates = int(g.integer("qmc", "replicates", c.qmc_replicates));

    c.tol_kernel_oracle = g.num("kernel_oracle", "tolerance", c.tol_kernel_oracle);
    c.ko_t = g.list("kernel_oracle", "t_grid", c.ko_t);
    c.tol_main = g.num("main_theorem", "tolerance", c.tol_main);
    c.tol_main_diag = g.num("main_theorem", "tolerance_diag", c.tol_main_diag);
    if (const std::string* v = g.find("main_theorem", "ts_pairs")) c.mt_ts = parse_pairs(*v);
    c.tol_lemmas = g.num("lemmas", "tolerance", c.tol_lemmas);
    if (const std::string* v = g.find("lemmas", "ts_pairs")) c.lm_ts = parse_pairs(*v);
    c.tol_lie = g.num("lie_action", "tolerance", c.tol_lie);
    c.tol_lie_complex = g.num("lie_action", "tolerance_complex", c.tol_lie_complex);
    c.lie_t = g.list("lie_action", "t_points", c.lie_t);
    c.lie_epsilon = g.num("lie_action", "epsilon", c.lie_epsilon);
    c.tol_intertwiner = g.num("intertwiner", "tolerance", c.tol_intertwiner);
    std::vector<MuSample> iw;
    for (int n = 1;; ++n) {
        const std::string* v = g.find("intertwiner", "sample." + std::to_string(n));
        if (!v) break;
        const auto parts = split_on(*v, ';');
        if (parts.size() != 2) throw ConfigError("intertwiner sample needs 'mu1 ; mu2'");
        iw.push_back({parse_complex(parts[0]), parse_complex(parts[1])});
    }
    if (!iw.empty()) c.iw_mu = iw;
    c.iw_t = g.list("intertwiner", "t_points", c.iw_t);
    c.density_grid_points = int(g.integer("densities", "grid_points", c.density_grid_points));
    c.density_grid_halfwidth = g.num("densities", "grid_halfwidth", c.density_grid_halfwidth);
    c.tol_density_limit = g.num("densities", "tolerance_limit", c.tol_density_limit);

    auto cpx = [&](const char* key, Cplx dflt) {
        const std::string* v = g.find("complex_spot", key);
        return v ? parse_complex(*v) : dflt;
    };
    c.cs_t = cpx("t", c.cs_t);
    c.cs_s = cpx("s", c.cs_s);
    if (const std::string* v = g.find("complex_spot", "mu")) {
        const auto parts = split_on(*v, ';');
        if (parts.size() != 4) throw ConfigError("complex_spot mu needs 'mu1 ; mu1p ; mu2 ; mu2p'");
        c.cs_mu1 = parse_complex(parts[0]);
        c.cs_mu1p = parse_complex(parts[1]);
        c.cs_mu2 = parse_complex(parts[2]);
        c.cs_mu2p = parse_complex(parts[3]);
    }
    if (const std::string* v = g.find("complex_spot", "sigma")) {
        const auto parts = split_on(*v, ';');
        if (parts.size() != 2) throw ConfigError("complex_spot sigma needs 'sigma ; sigmap'");
        c.cs_sigma = parse_complex(parts[0]);
        c.cs_sigmap = parse_complex(parts[1]);
    }
    c.cs_radius = g.num("complex_spot", "radius", c.cs_radius);

    c.validate();
    return c;
}

SuiteConfig SuiteConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse(os.str());
}

void SuiteConfig::validate() const {
    for (const auto& m : mu_samples)
        if (std::abs(m.mu1 - m.mu2) < 1e-9)
            throw ConfigError("mu sample violates mu1 != mu2");
    for (const auto& m : iw_mu)
        if (!(std::real(m.mu1 - m.mu2) < 0.0))
            throw ConfigError("intertwiner sample violates Re(mu1 - mu2) < 0");
    auto max_abs = [](const std::vector<double>& v) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::abs(x));
        return m;
    };
    double t_pairs = 0.0;
    for (const auto& [t, s] : mt_ts) t_pairs = std::max(t_pairs, std::abs(t));
    for (const auto& [t, s] : lm_ts) t_pairs = std::max(t_pairs, std::abs(t));
    const double t_need = std::max({max_abs(ko_t), t_pairs});
    if (t_need > t_max) throw ConfigError("a t grid exceeds the certified window t_max");
    for (const auto& d : test_functions) {
        TestFunction F{BumpBox(d.center, d.radii)};
        certify_window(F, t_max);  // throws when not certifiable
    }
    if (density_grid_points < 2) throw ConfigError("density grid needs >= 2 points");
}

int SuiteConfig::effective_threads() const {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

std::string SuiteConfig::to_text() const {
    std::ostringstream os;
    os << "# gl2fourier harness configuration\n";
    os << "# keys omitted here fall back to compiled-in defaults\n\n";
    os << "[general]\n";
    os << "seed = " << seed << "\n";
    os << "threads = " << threads << "   # 0 = hardware concurrency\n\n";
    os << "[window]\n";
    os << "t_max = " << format_double(t_max) << "\n\n";
    for (size_t i = 0; i < test_functions.size(); ++i) {
        const auto& d = test_functions[i];
        os << "[test_function." << (i + 1) << "]\n";
        os << "center = " << format_double(d.center.x11) << " " << format_double(d.center.x12)
           << " " << format_double(d.center.x21) << " " << format_double(d.center.x22) << "\n";
        os << "radii = " << format_double(d.radii[0]) << " " << format_double(d.radii[1]) << " "
           << format_double(d.radii[2]) << " " << format_double(d.radii[3]) << "\n\n";
    }
    os << "[section]\n";
    os << "center = " << format_double(section_center) << "\n";
    os << "halfwidth = " << format_double(section_halfwidth) << "\n\n";
    os << "[mu]\n";
    for (size_t i = 0; i < mu_samples.size(); ++i)
        os << "sample." << (i + 1) << " = " << format_complex(mu_samples[i].mu1) << " ; "
           << format_complex(mu_samples[i].mu2) << "\n";
    os << "\n[sigma]\nsamples =";
    for (const Cplx& s : sigma_samples) os << " " << format_complex(s);
    os << "\n\n[parities]\nclasses =";
    for (const auto& [e1, e2] : parities) os << " " << e1 << e2;
    os << "\n\n[quadrature]\n";
    os << "kernel_order = " << kernel_order << "\n";
    os << "oracle_kernel_order = " << oracle_kernel_order << "\n";
    os << "kernel_panels = " << kernel_panels << "\n";
    os << "direct_order = " << direct_order << "\n";
    os << "direct_panels = " << direct_panels << "\n";
    os << "oracle_s_order = " << oracle_s_order << "\n";
    os << "oracle_s_panels = " << oracle_s_panels << "\n";
    os << "singular_order = " << singular_order << "\n\n";
    os << "[qmc]\n";
    os << "points = " << qmc_points << "\n";
    os << "replicates = " << qmc_replicates << "\n\n";
    auto grid = [&os](const char* name, const std::vector<double>& v) {
        os << name << " =";
        for (double x : v) os << " " << format_double(x);
        os << "\n";
    };
    os << "[kernel_oracle]\n";
    os << "tolerance = " << format_double(tol_kernel_oracle) << "\n";
    grid("t_grid", ko_t);
    auto pairs = [&os](const char* name, const std::vector<std::pair<double, double>>& v) {
        os << name << " =";
        for (const auto& [t, s] : v)
            os << " (" << format_double(t) << "," << format_double(s) << ")";
        os << "\n";
    };
    os << "\n[main_theorem]\n";
    os << "tolerance = " << format_double(tol_main) << "\n";
    os << "tolerance_diag = " << format_double(tol_main_diag) << "\n";
    pairs("ts_pairs", mt_ts);
    os << "\n[lemmas]\n";
    os << "tolerance = " << format_double(tol_lemmas) << "\n";
    pairs("ts_pairs", lm_ts);
    os << "\n[lie_action]\n";
    os << "tolerance = " << format_double(tol_lie) << "\n";
    os << "tolerance_complex = " << format_double(tol_lie_complex) << "\n";
    grid("t_points", lie_t);
    os << "epsilon = " << format_double(lie_epsilon) << "\n";
    os << "\n[intertwiner]\n";
    os << "tolerance = " << format_double(tol_intertwiner) << "\n";
    for (size_t i = 0; i < iw_mu.size(); ++i)
        os << "sample." << (i + 1) << " = " << format_complex(iw_mu[i].mu1) << " ; "
           << format_complex(iw_mu[i].mu2) << "\n";
    grid("t_points", iw_t);
    os << "\n[densities]\n";
    os << "grid_points = " << density_grid_points << "\n";
    os << "grid_halfwidth = " << format_double(density_grid_halfwidth) << "\n";
    os << "tolerance_limit = " << format_double(tol_density_limit) << "\n";
    os << "\n[complex_spot]\n";
    os << "t = " << format_complex(cs_t) << "\n";
    os << "s = " << format_complex(cs_s) << "\n";
    os << "mu = " << format_complex(cs_mu1) << " ; " << format_complex(cs_mu1p) << " ; "
       << format_complex(cs_mu2) << " ; " << format_complex(cs_mu2p) << "\n";
    os << "sigma = " << format_complex(cs_sigma) << " ; " << format_complex(cs_sigmap) << "\n";
    os << "radius = " << format_double(cs_radius) << "\n";
    return os.str();
}

}  // namespace gl2
