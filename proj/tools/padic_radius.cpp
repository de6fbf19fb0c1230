#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/diffsys.hpp"
#include "padic/io.hpp"
#include "padic/polygon.hpp"

using namespace padic;
using nlohmann::json;

namespace {

// One output row as ordered (column, value) pairs.
using Row = std::vector<std::pair<std::string, std::string>>;

void emit(const std::vector<Row>& rows, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (const auto& [k, v] : row) obj[k] = v;
            arr.push_back(std::move(obj));
        }
        std::cout << arr.dump() << "\n";
        return;
    }
    if (rows.empty()) return;
    for (size_t i = 0; i < rows[0].size(); ++i) {
        if (i) std::cout << ",";
        std::cout << rows[0][i].first;
    }
    std::cout << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << row[i].second;
        }
        std::cout << "\n";
    }
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string piece =
            comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        try {
            out.push_back(rat_from_string(piece));
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "q1:q2:m" -> m equally spaced rationals from q1 to q2 inclusive.
std::vector<Rat> parse_grid(const std::string& s) {
    size_t c1 = s.find(':');
    size_t c2 = c1 == std::string::npos ? std::string::npos : s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw SchemaError("grid must be q1:q2:m");
    Rat q1, q2;
    long m;
    try {
        q1 = rat_from_string(s.substr(0, c1));
        q2 = rat_from_string(s.substr(c1 + 1, c2 - c1 - 1));
        m = std::stol(s.substr(c2 + 1));
    } catch (const std::exception& e) {
        throw SchemaError(std::string("grid must be q1:q2:m: ") + e.what());
    }
    if (m < 1) throw SchemaError("grid needs at least one sample");
    if (q1 > q2) throw SchemaError("grid requires q1 <= q2");
    std::vector<Rat> out;
    for (long k = 0; k < m; ++k) {
        Rat q = m == 1 ? q1 : Rat(q1 + (q2 - q1) * Rat(k, m - 1));
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return out;
}

GenericPoint make_point(int d, unsigned long p, const std::string& point,
                        const std::string& rho) {
    std::vector<Rat> center =
        point.empty() ? std::vector<Rat>(d, Rat(0)) : parse_rat_list(point);
    if (static_cast<int>(center.size()) != d)
        throw SchemaError("--point needs one coordinate per variable");
    GenericPoint xi;
    if (rho.empty()) {
        xi = GenericPoint::rational(std::move(center));
    } else {
        std::vector<Rat> q = parse_rat_list(rho);
        if (q.size() == 1 && d > 1) q.assign(d, q[0]);
        if (static_cast<int>(q.size()) != d)
            throw SchemaError("--rho needs one log-radius per variable");
        xi = GenericPoint::at(std::move(center), std::move(q));
    }
    try {
        xi.validate(p);
    } catch (const std::invalid_argument& e) {
        throw MembershipError(e.what());
    }
    return xi;
}

// Membership check that names the violated constraint.
void require_member(const LaurentSpec& spec, const GenericPoint& xi,
                    unsigned long p) {
    for (size_t i = 0; i < spec.caps.size(); ++i) {
        if (gauss_norm(spec.caps[i].poly, xi, p).value > spec.caps[i].bound)
            throw MembershipError("point violates cap constraint #" +
                                  std::to_string(i));
    }
    for (size_t j = 0; j < spec.cups.size(); ++j) {
        if (gauss_norm(spec.cups[j].poly, xi, p).value < spec.cups[j].bound)
            throw MembershipError("point violates cup constraint #" +
                                  std::to_string(j));
    }
}

std::string approx_radius(const XRat& logp, unsigned long p, int digits) {
    if (logp.is_neg_inf()) return "0";
    if (logp.is_pos_inf()) return "inf";
    double v = std::pow(static_cast<double>(p),
                        mpq_get_d(logp.value().get_mpq_t()));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string flag(bool b) { return b ? "true" : "false"; }

struct Options {
    std::string system_file;
    std::string domain_file;
    std::string poly_file;
    uint32_t trunc = 64;
    uint32_t window = 0;  // 0: trunc/2
    std::string grid;
    std::string point;
    std::string rho;
    std::string format = "csv";
    int approx = 0;
    unsigned jobs = 1;
    unsigned long prime = 2;
    std::string claim_r;
    std::string audits = "wronskian,dwork-robba,transfer,concavity";
    std::vector<std::string> mus;
};

uint32_t effective_window(const Options& o) {
    uint32_t w = o.window ? o.window : std::max<uint32_t>(1, o.trunc / 2);
    if (o.trunc < 2 * w)
        throw SchemaError("--trunc must be at least twice --window");
    return w;
}

Row estimate_row(const Options& opt, const DiffSystem& sys,
                 const RadiusEstimate& est, const std::string& rho_str) {
    Row row;
    if (!rho_str.empty()) row.push_back({"rho", rho_str});
    row.push_back({"log_R_window", est.upper_window.str()});
    row.push_back({"log_trivial", est.trivial_lower.str()});
    row.push_back({"log_delta", est.delta.str()});
    row.push_back({"log_R", est.radius.str()});
    row.push_back({"stabilized", flag(est.stabilized)});
    if (opt.approx > 0)
        row.push_back(
            {"R_approx", approx_radius(est.radius.logp, sys.p, opt.approx)});
    return row;
}

int cmd_iterate(const Options& opt) {
    DiffSystem sys = load_system(opt.system_file);
    Strata st = iterate(sys, opt.trunc);
    std::vector<GenericPoint> shilov = shilov_points(sys.domain, sys.p);
    std::vector<Row> rows;
    for (uint32_t s = 0; s <= opt.trunc; ++s) {
        for (const auto& alpha : st.level(s)) {
            XRat n = XRat::neg_inf();
            for (const auto& eta : shilov)
                n = padic::max(n, st.log_norm_at(alpha, eta, sys.p));
            rows.push_back(Row{{"alpha", alpha.str()},
                               {"log_norm_U", n.str()}});
        }
    }
    emit(rows, opt.format);
    return 0;
}

int cmd_radius(const Options& opt) {
    DiffSystem sys = load_system(opt.system_file);
    uint32_t w = effective_window(opt);
    GenericPoint xi = make_point(sys.d, sys.p, opt.point, opt.rho);
    require_member(sys.domain, xi, sys.p);
    Strata st = iterate(sys, opt.trunc);
    RadiusEstimate est = radius_estimate(sys, st, xi, w);
    emit({estimate_row(opt, sys, est, "")}, opt.format);
    return 0;
}

int cmd_profile(const Options& opt) {
    DiffSystem sys = load_system(opt.system_file);
    if (sys.d != 1) throw SchemaError("profile requires a one-variable system");
    uint32_t w = effective_window(opt);
    if (opt.grid.empty()) throw SchemaError("profile requires --grid");
    std::vector<Rat> samples = parse_grid(opt.grid);
    if (samples.size() < 2) throw SchemaError("profile grid needs m >= 2");
    Rat center = opt.point.empty() ? Rat(0) : parse_rat_list(opt.point).at(0);
    std::vector<GenericPoint> pts;
    for (const Rat& q : samples) {
        GenericPoint xi = GenericPoint::disk_boundary(center, q);
        try {
            xi.validate(sys.p);
        } catch (const std::invalid_argument& e) {
            throw MembershipError(e.what());
        }
        require_member(sys.domain, xi, sys.p);
        pts.push_back(std::move(xi));
    }
    Strata st = iterate(sys, opt.trunc);
    std::vector<RadiusEstimate> ests(pts.size());
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < pts.size(); ++i)
            ests[i] = radius_estimate(sys, st, pts[i], w);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next++; i < pts.size(); i = next++)
                    ests[i] = radius_estimate(sys, st, pts[i], w);
            });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<Row> rows;
    for (size_t i = 0; i < pts.size(); ++i)
        rows.push_back(estimate_row(opt, sys, ests[i], rat_to_string(samples[i])));
    emit(rows, opt.format);
    return 0;
}

int cmd_diameter(const Options& opt) {
    LaurentSpec spec = load_spec(opt.domain_file);
    GenericPoint xi = make_point(spec.d, opt.prime, opt.point, opt.rho);
    require_member(spec, xi, opt.prime);
    DiameterReport rep = diameter(spec, xi, opt.prime);
    std::string kind = rep.witness.kind == DiameterWitness::Kind::Cap   ? "cap"
                       : rep.witness.kind == DiameterWitness::Kind::Cup ? "cup"
                                                                        : "none";
    Row row{{"log_delta", rep.delta.str()},
            {"witness_kind", kind},
            {"witness_constraint", std::to_string(rep.witness.constraint)},
            {"witness_alpha",
             rep.witness.kind == DiameterWitness::Kind::None ? "-"
                                                             : rep.witness.alpha.str()},
            {"truncation_bound", std::to_string(rep.truncation_bound)}};
    if (opt.approx > 0)
        row.push_back({"delta_approx",
                       approx_radius(rep.delta.logp, opt.prime, opt.approx)});
    emit({row}, opt.format);
    return 0;
}

int cmd_polygon(const Options& opt) {
    PSeries f = load_poly(opt.poly_file);
    std::vector<std::vector<Rat>> mus;
    if (!opt.grid.empty()) {
        if (f.dim() != 1)
            throw SchemaError("--grid applies to one-variable polynomials; use --mu");
        for (Rat& q : parse_grid(opt.grid)) mus.push_back({std::move(q)});
    }
    for (const auto& m : opt.mus) {
        std::vector<Rat> mu = parse_rat_list(m);
        if (static_cast<int>(mu.size()) != f.dim())
            throw SchemaError("--mu needs one entry per variable");
        mus.push_back(std::move(mu));
    }
    if (mus.empty()) throw SchemaError("polygon requires --grid or --mu");
    std::vector<Row> rows;
    for (const auto& mu : mus) {
        PolygonResult res;
        try {
            res = v_of(f, mu, opt.prime);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
        std::string mu_str;
        for (size_t i = 0; i < mu.size(); ++i) {
            if (i) mu_str += ";";
            mu_str += rat_to_string(mu[i]);
        }
        rows.push_back(Row{{"mu", mu_str},
                           {"v", rat_to_string(res.value)},
                           {"regular", flag(res.regular)},
                           {"minimizers", std::to_string(res.minimizers.size())}});
    }
    emit(rows, opt.format);
    return 0;
}

int cmd_audit(const Options& opt) {
    DiffSystem sys = load_system(opt.system_file);
    uint32_t w = effective_window(opt);
    std::vector<std::string> selected;
    {
        size_t pos = 0;
        while (pos <= opt.audits.size()) {
            size_t comma = opt.audits.find(',', pos);
            std::string name = comma == std::string::npos
                                   ? opt.audits.substr(pos)
                                   : opt.audits.substr(pos, comma - pos);
            if (!name.empty()) selected.push_back(name);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (selected.empty()) throw SchemaError("audit requires at least one audit name");

    GenericPoint xi = make_point(sys.d, sys.p, opt.point,
                                 opt.rho.empty() ? "0" : opt.rho);
    require_member(sys.domain, xi, sys.p);
    Strata st = iterate(sys, opt.trunc);

    bool all_pass = true;
    std::vector<Row> rows;
    for (const auto& name : selected) {
        Row row{{"audit", name}};
        bool pass = false;
        if (name == "wronskian") {
            std::vector<Rat> a =
                opt.point.empty() ? std::vector<Rat>(sys.d, Rat(0))
                                  : parse_rat_list(opt.point);
            PolyMat y = fundamental_solution(sys, st, a, opt.trunc);
            WronskianReport rep = wronskian_check(sys, y, opt.trunc);
            pass = rep.ok;
            row.push_back({"pass", flag(pass)});
            row.push_back({"detail", rep.ok ? "-"
                                            : "first failure at " +
                                                  rep.first_failure.str() +
                                                  " coordinate " +
                                                  std::to_string(rep.coordinate)});
        } else if (name == "dwork-robba") {
            Radius r;
            if (opt.claim_r.empty()) {
                r = radius_estimate(sys, st, xi, w).radius;
            } else {
                try {
                    r = Radius::from_log(rat_from_string(opt.claim_r));
                } catch (const std::invalid_argument& e) {
                    throw SchemaError(e.what());
                }
            }
            GrowthReport rep = dwork_robba_check(sys, st, xi, r, opt.trunc);
            pass = rep.ok;
            row.push_back({"pass", flag(pass)});
            row.push_back({"detail", "min_slack=" + rep.min_slack.str() +
                                         " worst=" + rep.worst.str() +
                                         " violations=" +
                                         std::to_string(rep.violations.size())});
        } else if (name == "transfer") {
            std::vector<GenericPoint> shilov = shilov_points(sys.domain, sys.p);
            TransferReport rep = transfer_bound(sys, st, xi, shilov, w);
            pass = rep.pass;
            row.push_back({"pass", flag(pass)});
            row.push_back({"detail", "window=" + rep.window.str() +
                                         " min_shilov=" + rep.min_shilov.str()});
        } else if (name == "concavity") {
            if (opt.grid.empty()) throw SchemaError("concavity audit requires --grid");
            std::vector<Rat> grid = parse_grid(opt.grid);
            ConcavityReport rep;
            try {
                rep = concavity_scan(sys, st, grid, w);
            } catch (const std::invalid_argument& e) {
                throw SchemaError(e.what());
            }
            pass = rep.concave;
            row.push_back({"pass", flag(pass)});
            row.push_back(
                {"detail", rep.vacuous
                               ? "vacuous (all infinite)"
                               : "violations=" + std::to_string(rep.violations.size())});
        } else if (name == "usc") {
            // phi_s = min(delta, min_{s <= |alpha| <= N} |G_[alpha]|^{-1/|alpha|})
            // must be nondecreasing in s.
            Radius delta = diameter(sys.domain, xi, sys.p).delta;
            XRat prev = XRat::neg_inf();
            pass = true;
            for (uint32_t s = w; s <= opt.trunc; ++s) {
                XRat tail = XRat::pos_inf();
                for (uint32_t t = s; t <= opt.trunc; ++t) {
                    for (const auto& alpha : st.level(t)) {
                        XRat n = st.log_norm_at(alpha, xi, sys.p);
                        if (n.is_neg_inf()) continue;
                        n = n + XRat(vp_multifactorial(alpha.entries(), sys.p));
                        tail = padic::min(tail, -n.scaled(Rat(1, t)));
                    }
                }
                XRat phi = padic::min(delta.logp, tail);
                if (phi < prev) pass = false;
                prev = phi;
            }
            row.push_back({"pass", flag(pass)});
            row.push_back({"detail", "phi_N=" + prev.str()});
        } else {
            throw SchemaError("unknown audit: " + name);
        }
        all_pass = all_pass && pass;
        rows.push_back(std::move(row));
    }
    emit(rows, opt.format);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    // Reserved for future randomized modes; everything is deterministic now.
    (void)std::getenv("PADIC_RADIUS_SEED");

    CLI::App app{"Exact p-adic radius-of-convergence computations"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--trunc", opt.trunc, "truncation order N");
        sub->add_option("--window", opt.window, "window start s0 (default N/2)");
        sub->add_option("--format", opt.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--approx", opt.approx, "decimal digits for approx column");
        sub->add_option("--jobs", opt.jobs, "worker threads");
        sub->add_option("--point", opt.point, "rational center a1,a2,...");
        sub->add_option("--rho", opt.rho, "log_p radii q1,q2,...");
        sub->add_option("--grid", opt.grid, "log-radius grid q1:q2:m");
    };

    CLI::App* it = app.add_subcommand("iterate", "dump strata sup-norms");
    it->add_option("--system", opt.system_file)->required();
    add_common(it);
    CLI::App* ra = app.add_subcommand("radius", "radius estimate at a point");
    ra->add_option("--system", opt.system_file)->required();
    add_common(ra);
    CLI::App* pr = app.add_subcommand("profile", "radius profile along t_{a,p^q}");
    pr->add_option("--system", opt.system_file)->required();
    add_common(pr);
    CLI::App* di = app.add_subcommand("diameter", "Laurent-domain diameter");
    di->add_option("--domain", opt.domain_file)->required();
    di->add_option("--prime", opt.prime, "prime p");
    add_common(di);
    CLI::App* po = app.add_subcommand("polygon", "valuation polygon table");
    po->add_option("--poly", opt.poly_file)->required();
    po->add_option("--prime", opt.prime, "prime p");
    po->add_option("--mu", opt.mus, "mu tuple m1,m2,... (repeatable)");
    add_common(po);
    CLI::App* au = app.add_subcommand("audit", "inequality audits");
    au->add_option("--system", opt.system_file)->required();
    au->add_option("--audits", opt.audits,
                   "comma list: wronskian,dwork-robba,transfer,concavity,usc");
    au->add_option("--claim-R", opt.claim_r,
                   "log_p of a claimed radius for the dwork-robba audit");
    add_common(au);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (it->parsed()) return cmd_iterate(opt);
        if (ra->parsed()) return cmd_radius(opt);
        if (pr->parsed()) return cmd_profile(opt);
        if (di->parsed()) return cmd_diameter(opt);
        if (po->parsed()) return cmd_polygon(opt);
        if (au->parsed()) return cmd_audit(opt);
    } catch (const MembershipError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
