// Command-line front end: exact Umemura/rational-solution data, eye geometry,
// Boutroux curves, the asymptotic approximations, densities, and the compare
// harness that sweeps exact-versus-asymptotic along a real segment.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "p3r/density.hpp"
#include "p3r/errors.hpp"
#include "p3r/halfint.hpp"
#include "p3r/outer.hpp"
#include "p3r/umemura.hpp"

using namespace p3r;
using nlohmann::json;

namespace {

constexpr int kDigits = 25;

std::string fmt(const Real& v) {
    std::ostringstream os;
    os.precision(kDigits);
    os << v;
    return os.str();
}

json cjson(const Complex& z) {
    return json{{"re", fmt(z.re)}, {"im", fmt(z.im)}};
}

Complex parse_complex(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(Real(text));
    return Complex(Real(text.substr(0, comma)), Real(text.substr(comma + 1)));
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw UsageError("cannot open output file " + path);
    return file;
}

struct CompareRow {
    Real y;
    Complex exact;
    bool exact_pole = false;
    Complex approx;
    std::string regime;
    Real carveout{-1};
    bool flagged = false;
    bool approx_ok = true;
};

CompareRow compare_row(int n, const GaussianRational& m, const Real& yv) {
    CompareRow row;
    row.y = yv;
    Complex y{yv};
    try {
        row.exact = eval_un(Real(n) * y, n, m);
    } catch (const PoleAt&) {
        row.exact_pole = true;
    }
    try {
        if (is_half_integer(m)) {
            long two_m = static_cast<long>(numerator(m.re * 2));
            int sign = two_m > 0 ? +1 : -1;
            int k = static_cast<int>((std::abs(two_m) - 1) / 2);
            ApproxValue av = udot_halfint(n, k, sign, y);
            row.approx = av.value;
            row.regime = av.regime_detail;
            row.flagged = av.near_divisor;
            row.carveout = av.carveout;
        } else if (eye().inside_eye(y) && abs(yv) > Real("1e-4")) {
            ApproxValue av = udot_elliptic(n, y, Complex(0), m);
            row.approx = av.value;
            row.regime = "elliptic";
            row.carveout = av.carveout;
            row.flagged = av.near_divisor;
        } else if (!eye().inside_eye(y)) {
            row.approx = udot_outer(y, 0, n);
            row.regime = "outer";
            row.carveout = Real(1);
        } else {
            row.approx_ok = false;
            row.regime = "origin";
        }
    } catch (const NumericError& e) {
        row.approx_ok = false;
        row.regime = std::string("failed:") + e.kind();
    }
    return row;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational Painleve-III solutions: exact constructions and "
                 "large-n asymptotic approximations"};
    app.require_subcommand(1);

    unsigned precision = 256;
    if (const char* env = std::getenv("PAINLEVE3_PRECISION"))
        precision = static_cast<unsigned>(std::atoi(env));
    app.add_option("--precision", precision, "working precision in bits");

    std::string m_str = "0", x_str = "1", y_str = "0.25", w_str = "0";
    std::string out_path, rect_str = "0.08,0.18,-0.05,0.05", segment_str = "-0.5,0.5";
    std::string grid_str;
    int n = 5, j = 0, k = 0, sign = -1, samples = 200;
    unsigned root_bits = 512;

    auto* cmd_umemura = app.add_subcommand("umemura", "emit s_n coefficients (exact rationals)");
    cmd_umemura->add_option("--n", n)->required();
    cmd_umemura->add_option("--m", m_str);
    cmd_umemura->add_option("--out", out_path);

    auto* cmd_roots = app.add_subcommand("roots", "classified pole/zero atlas of u_n");
    cmd_roots->add_option("--n", n)->required();
    cmd_roots->add_option("--m", m_str);
    cmd_roots->add_option("--bits", root_bits);
    cmd_roots->add_option("--out", out_path);

    auto* cmd_eval = app.add_subcommand("eval", "evaluate u_n(x;m exactly");
    cmd_eval->add_option("--n", n)->required();
    cmd_eval->add_option("--m", m_str);
    cmd_eval->add_option("--x", x_str)->required();

    auto* cmd_eye = app.add_subcommand("eye", "trace the eye boundary");
    int eye_samples = 400;
    cmd_eye->add_option("--samples", eye_samples);
    cmd_eye->add_option("--out", out_path);

    auto* cmd_boutroux = app.add_subcommand("boutroux", "solve the Boutroux conditions at y");
    cmd_boutroux->add_option("--y", y_str)->required();

    auto* cmd_outer = app.add_subcommand("approx-outer", "equilibrium approximation outside the eye");
    cmd_outer->add_option("--y", y_str)->required();
    cmd_outer->add_option("--j", j);
    cmd_outer->add_option("--n", n)->required();

    auto* cmd_elliptic = app.add_subcommand("approx-elliptic", "interior theta-function approximation");
    cmd_elliptic->add_option("--n", n)->required();
    cmd_elliptic->add_option("--m", m_str);
    cmd_elliptic->add_option("--y", y_str);
    cmd_elliptic->add_option("--w", w_str);
    cmd_elliptic->add_option("--grid", grid_str,
                             "x0,x1,y0,y1,K: emit quantization-index CSV over a grid");
    cmd_elliptic->add_option("--out", out_path);

    auto* cmd_halfint = app.add_subcommand("approx-halfint", "layered approximation for half-integer m");
    cmd_halfint->add_option("--n", n)->required();
    cmd_halfint->add_option("--k", k)->required();
    cmd_halfint->add_option("--sign", sign);
    cmd_halfint->add_option("--y", y_str)->required();

    auto* cmd_curves = app.add_subcommand("eyebrow-curves", "Theorem-7 pole/zero curves");
    int curve_samples = 120;
    cmd_curves->add_option("--n", n)->required();
    cmd_curves->add_option("--k", k)->required();
    cmd_curves->add_option("--samples", curve_samples);
    cmd_curves->add_option("--out", out_path);

    auto* cmd_density = app.add_subcommand("density", "limiting pole/zero density on a grid");
    cmd_density->add_option("--grid", grid_str, "x0,x1,y0,y1,K")->required();
    cmd_density->add_option("--out", out_path);

    auto* cmd_count = app.add_subcommand("count", "expected vs observed root counts in a rectangle");
    cmd_count->add_option("--n", n)->required();
    cmd_count->add_option("--m", m_str);
    cmd_count->add_option("--rect", rect_str, "a,b,c,d");

    auto* cmd_compare = app.add_subcommand("compare", "exact vs approximation along a real segment");
    cmd_compare->add_option("--n", n)->required();
    cmd_compare->add_option("--m", m_str);
    cmd_compare->add_option("--segment", segment_str, "y0,y1");
    cmd_compare->add_option("--samples", samples);
    cmd_compare->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_precision_bits(precision);
        std::ofstream file;

        if (cmd_umemura->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            auto seq = build_sequence(n, m);
            std::ostream& os = open_out(file, out_path);
            os << "n,k,coeff_re,coeff_im\n";
            for (int i = 0; i < static_cast<int>(seq.size()); ++i)
                for (std::size_t c = 0; c < seq[i].coeffs().size(); ++c) {
                    const auto& gc = seq[i].coeffs()[c];
                    os << (i - 1) << "," << c << "," << gc.re << "," << gc.im << "\n";
                }
        } else if (cmd_roots->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            RationalSolution rs = classified_roots(n, m, root_bits);
            std::ostream& os = open_out(file, out_path);
            os << "n,m_re,m_im,class,re,im\n";
            auto dump = [&](const std::vector<Complex>& roots, const char* cls) {
                for (const auto& r : roots)
                    os << n << "," << m.re << "," << m.im << "," << cls << ","
                       << fmt(r.re) << "," << fmt(r.im) << "\n";
            };
            dump(rs.zero_roots_filled, "zero_filled");
            dump(rs.zero_roots_open, "zero_open");
            dump(rs.pole_roots_filled, "pole_filled");
            dump(rs.pole_roots_open, "pole_open");
        } else if (cmd_eval->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            Complex v = eval_un(parse_complex(x_str), n, m);
            std::cout << json{{"value", cjson(v)}}.dump(2) << "\n";
        } else if (cmd_eye->parsed()) {
            EyeGeometry g = trace_eye_boundary(eye_samples);
            std::ostream& os = open_out(file, out_path);
            os << "theta,r,re_y,im_y\n";
            for (std::size_t i = 0; i < g.thetas.size(); ++i) {
                Complex y = g.radii[i] * Complex(cos(g.thetas[i]), sin(g.thetas[i]));
                os << fmt(g.thetas[i]) << "," << fmt(g.radii[i]) << ","
                   << fmt(y.re) << "," << fmt(y.im) << "\n";
            }
            for (std::size_t i = 0; i < g.thetas.size(); ++i) {
                // left eyebrow by reflection through the origin
                Real theta = g.thetas[i] > 0 ? g.thetas[i] - pi() : g.thetas[i] + pi();
                Complex y = -(g.radii[i] * Complex(cos(g.thetas[i]), sin(g.thetas[i])));
                os << fmt(theta) << "," << fmt(g.radii[i]) << ","
                   << fmt(y.re) << "," << fmt(y.im) << "\n";
            }
        } else if (cmd_boutroux->parsed()) {
            SpectralCurve c = solve_boutroux(parse_complex(y_str));
            auto res = boutroux_residual(c);
            json out{{"C", cjson(c.C)},
                     {"roots", json::array({cjson(c.lam0), cjson(c.lam1),
                                            cjson(c.lam1_inv), cjson(c.lam0_inv)})},
                     {"residuals", json::array({fmt(res.Ba), fmt(res.Bb)})}};
            std::cout << out.dump(2) << "\n";
        } else if (cmd_outer->parsed()) {
            Complex v = udot_outer(parse_complex(y_str), j, n);
            std::cout << json{{"value", cjson(v)}, {"j", j}, {"regime", "outer"}}.dump(2)
                      << "\n";
        } else if (cmd_elliptic->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            if (!grid_str.empty()) {
                std::istringstream gs(grid_str);
                std::string a, b, cc, d, kk;
                std::getline(gs, a, ',');
                std::getline(gs, b, ',');
                std::getline(gs, cc, ',');
                std::getline(gs, d, ',');
                std::getline(gs, kk, ',');
                int K = std::stoi(kk);
                std::ostream& os = open_out(file, out_path);
                os << "re_y,im_y,alpha0p,beta0p,alpha0m,beta0m,alphaInfp,betaInfp,"
                      "alphaInfm,betaInfm\n";
                for (int iy = 0; iy < K; ++iy)
                    for (int ix = 0; ix < K; ++ix) {
                        Complex y(Real(a) + (Real(b) - Real(a)) * (ix + Real(1) / 2) / K,
                                  Real(cc) + (Real(d) - Real(cc)) * (iy + Real(1) / 2) / K);
                        try {
                            QuantIndices q = quantization_indices(n, y, Complex(0), m);
                            os << fmt(y.re) << "," << fmt(y.im) << "," << fmt(q.alpha0_p)
                               << "," << fmt(q.beta0_p) << "," << fmt(q.alpha0_m) << ","
                               << fmt(q.beta0_m) << "," << fmt(q.alphaInf_p) << ","
                               << fmt(q.betaInf_p) << "," << fmt(q.alphaInf_m) << ","
                               << fmt(q.betaInf_m) << "\n";
                        } catch (const NumericError&) {
                            // outside the solvable region; skip the grid point
                        }
                    }
            } else {
                ApproxValue av = udot_elliptic(n, parse_complex(y_str), parse_complex(w_str), m);
                json out{{"value", cjson(av.value)},
                         {"carveout", fmt(av.carveout)},
                         {"regime", "elliptic"},
                         {"near_divisor", av.near_divisor}};
                std::cout << out.dump(2) << "\n";
            }
        } else if (cmd_halfint->parsed()) {
            ApproxValue av = udot_halfint(n, k, sign, parse_complex(y_str));
            json out{{"value", cjson(av.value)}, {"regime", av.regime_detail}};
            std::cout << out.dump(2) << "\n";
        } else if (cmd_curves->parsed()) {
            auto curves = eyebrow_curves(n, k, curve_samples);
            std::ostream& os = open_out(file, out_path);
            os << "curve_id,type,re_y,im_y\n";
            for (const auto& c : curves)
                for (const auto& p : c.curve.nodes())
                    os << c.id << "," << (c.is_zero ? "zero" : "pole") << ","
                       << fmt(p.re) << "," << fmt(p.im) << "\n";
        } else if (cmd_density->parsed()) {
            std::istringstream gs(grid_str);
            std::string a, b, cc, d, kk;
            std::getline(gs, a, ',');
            std::getline(gs, b, ',');
            std::getline(gs, cc, ',');
            std::getline(gs, d, ',');
            std::getline(gs, kk, ',');
            int K = std::stoi(kk);
            std::ostream& os = open_out(file, out_path);
            os << "re_y,im_y,rho\n";
            for (int iy = 0; iy < K; ++iy)
                for (int ix = 0; ix < K; ++ix) {
                    Complex y(Real(a) + (Real(b) - Real(a)) * (ix + Real(1) / 2) / K,
                              Real(cc) + (Real(d) - Real(cc)) * (iy + Real(1) / 2) / K);
                    try {
                        os << fmt(y.re) << "," << fmt(y.im) << "," << fmt(rho(y).rho) << "\n";
                    } catch (const NumericError&) {
                    }
                }
        } else if (cmd_count->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            std::istringstream rs(rect_str);
            std::string a, b, cc, d;
            std::getline(rs, a, ',');
            std::getline(rs, b, ',');
            std::getline(rs, cc, ',');
            std::getline(rs, d, ',');
            CountResult res = count_vs_integral(n, m, Real(a), Real(b), Real(cc), Real(d));
            json out{{"expected", fmt(res.expected)},
                     {"observed_zeros", res.observed_zeros},
                     {"observed_poles", res.observed_poles}};
            std::cout << out.dump(2) << "\n";
        } else if (cmd_compare->parsed()) {
            GaussianRational m = GaussianRational::parse(m_str);
            auto comma = segment_str.find(',');
            if (comma == std::string::npos)
                throw UsageError("--segment expects y0,y1");
            Real y0(segment_str.substr(0, comma)), y1(segment_str.substr(comma + 1));
            std::ostream& os = open_out(file, out_path);
            os << "y,exact_re,exact_im,approx_re,approx_im,regime,abs_error,carveout,flagged\n";
            for (int i = 0; i < samples; ++i) {
                Real yv = y0 + (y1 - y0) * i / (samples - 1);
                CompareRow row = compare_row(n, m, yv);
                os << fmt(row.y) << ",";
                if (row.exact_pole) os << "inf,inf,";
                else os << fmt(row.exact.re) << "," << fmt(row.exact.im) << ",";
                if (row.approx_ok) os << fmt(row.approx.re) << "," << fmt(row.approx.im) << ",";
                else os << "nan,nan,";
                os << row.regime << ",";
                if (row.exact_pole || !row.approx_ok) os << "nan,";
                else os << fmt(abs(row.exact - row.approx)) << ",";
                if (row.carveout >= 0) os << fmt(row.carveout);
                os << "," << (row.flagged ? 1 : 0) << "\n";
            }
        }
    } catch (const NumericError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
