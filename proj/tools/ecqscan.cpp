// ecqscan: specialize rational points on y^2 = x^3 + ax + b into ideal
// classes of real quadratic fields Q(sqrt(p^3 + ap + b)), and scan primes
// for non-trivial classes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecq/scan.hpp"

using nlohmann::json;
using namespace ecq;

namespace {

Rat parse_rational(const std::string& s) {
    Rat r(s); // throws std::invalid_argument on garbage
    r.canonicalize();
    return r;
}

json point_json(const Point& p) {
    if (p.is_infinity()) return {{"infinity", true}};
    return {{"x", p.x().get_str()}, {"y", p.y().get_str()}};
}

json specialization_json(const SpecializationResult& r) {
    json j;
    j["p"] = r.p.get_str();
    j["d"] = r.d.get_str();
    j["status"] = to_string(r.status);
    if (r.d_factorization) {
        j["d_factorization"] = r.d_factorization->to_string();
        j["squarefree"] = r.squarefree;
    }
    if (r.status != Status::DNonPositive && r.status != Status::DSquare &&
        r.status != Status::DNotSquarefree && r.status != Status::FactorizationTimeout) {
        j["A"] = r.A.get_str();
    }
    if (r.ideal) {
        j["B"] = r.B.get_str();
        j["ideal"] = {{"norm", r.ideal->norm.get_str()}, {"root", r.ideal->root.get_str()}};
    }
    if (r.form) j["form"] = {r.form->a.get_str(), r.form->b.get_str(), r.form->c.get_str()};
    if (r.field) j["fundamental_discriminant"] = r.field->fundamental_discriminant.get_str();
    if (r.maximal_form)
        j["maximal_form"] = {r.maximal_form->a.get_str(), r.maximal_form->b.get_str(),
                             r.maximal_form->c.get_str()};
    json flags = json::array();
    if (r.bad_reduction) flags.push_back("bad_reduction");
    if (r.denominator_prime) flags.push_back("denominator_prime");
    j["flags"] = flags;
    if (r.status == Status::Ok) {
        ClassVerdict v = class_verdict(r);
        j["class_order_order"] = v.order_in_order_class_group.get_str();
        if (v.order_in_maximal) j["class_order_maximal"] = v.order_in_maximal->get_str();
        j["nontrivial"] = v.nontrivial;
    }
    return j;
}

struct CurveArgs {
    std::string a, b;
    Curve make() const { return Curve(Int(a), Int(b)); }
};

struct PointArgs {
    std::string x, y;
    Point make() const { return Point::affine(parse_rational(x), parse_rational(y)); }
};

void add_curve_opts(CLI::App* app, CurveArgs* c) {
    app->add_option("--a", c->a, "curve coefficient a")->required();
    app->add_option("--b", c->b, "curve coefficient b")->required();
}

void add_point_opts(CLI::App* app, PointArgs* p) {
    app->add_option("--x", p->x, "point x coordinate (rational, e.g. 129/100)")->required();
    app->add_option("--y", p->y, "point y coordinate")->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic curve specialization into real quadratic class groups"};
    app.require_subcommand(1);

    // curve info
    auto* curve_cmd = app.add_subcommand("curve", "curve-level queries");
    curve_cmd->require_subcommand(1);
    CurveArgs ci;
    auto* curve_info = curve_cmd->add_subcommand("info", "discriminant and singularity");
    add_curve_opts(curve_info, &ci);

    // point check|mul|torsion
    auto* point_cmd = app.add_subcommand("point", "point-level queries");
    point_cmd->require_subcommand(1);
    CurveArgs pc;
    PointArgs pp;
    std::string n_str = "1";
    auto* point_check = point_cmd->add_subcommand("check", "is the point on the curve");
    auto* point_mul = point_cmd->add_subcommand("mul", "scalar multiple nP");
    auto* point_torsion = point_cmd->add_subcommand("torsion", "torsion order or infinite order");
    for (CLI::App* sub : {point_check, point_mul, point_torsion}) {
        add_curve_opts(sub, &pc);
        add_point_opts(sub, &pp);
    }
    point_mul->add_option("--n", n_str, "multiplier")->required();

    // classgroup
    auto* cg_cmd = app.add_subcommand("classgroup", "class numbers by cycle enumeration");
    std::string delta_str, d_str;
    cg_cmd->add_option("--delta", delta_str, "form discriminant (positive nonsquare, 0/1 mod 4)");
    cg_cmd->add_option("--d", d_str, "radicand; uses discriminant 4d");

    // specialize
    auto* sp_cmd = app.add_subcommand("specialize", "specialize a point at one prime");
    CurveArgs sc;
    PointArgs sp;
    std::string sp_p;
    bool sp_order_mode = false;
    add_curve_opts(sp_cmd, &sc);
    add_point_opts(sp_cmd, &sp);
    sp_cmd->add_option("--p", sp_p, "prime >= 3")->required();
    sp_cmd->add_flag("--order-mode", sp_order_mode, "compute in Z[sqrt d] for non-squarefree d");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "scan all primes up to a bound");
    CurveArgs xc;
    PointArgs xp;
    std::string pmax_str, out_file, format = "csv", aux_point;
    bool scan_order_mode = false, allow_torsion = false;
    unsigned jobs = 1;
    add_curve_opts(scan_cmd, &xc);
    add_point_opts(scan_cmd, &xp);
    scan_cmd->add_option("--pmax", pmax_str, "largest prime to consider")->required();
    scan_cmd->add_flag("--order-mode", scan_order_mode, "include non-squarefree d (Z[sqrt d] only)");
    scan_cmd->add_option("--jobs", jobs, "worker threads");
    scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    scan_cmd->add_option("--out", out_file, "output file (default stdout)");
    scan_cmd->add_flag("--allow-torsion", allow_torsion, "scan even if the point is torsion");
    scan_cmd->add_option("--aux-point", aux_point,
                         "auxiliary rational point X,Y (recorded, not used)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems are exit code 1; --help stays 0
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*curve_info) {
            json j;
            j["a"] = ci.a;
            j["b"] = ci.b;
            try {
                Curve c = ci.make();
                j["discriminant"] = c.discriminant().get_str();
                j["singular"] = false;
            } catch (const SingularCurveError&) {
                j["discriminant"] = "0";
                j["singular"] = true;
            }
            std::cout << j.dump() << '\n';
            return 0;
        }

        if (*point_check || *point_mul || *point_torsion) {
            Curve c = pc.make();
            Point p = pp.make();
            if (*point_check) {
                std::cout << json{{"on_curve", on_curve(c, p)}}.dump() << '\n';
                return 0;
            }
            if (!on_curve(c, p)) {
                std::cerr << "point is not on the curve\n";
                return 2;
            }
            if (*point_mul) {
                std::cout << point_json(scalar_mul(c, Int(n_str), p)).dump() << '\n';
            } else {
                auto order = is_torsion(c, p);
                json j;
                j["torsion"] = order.has_value();
                if (order) j["order"] = *order;
                std::cout << j.dump() << '\n';
            }
            return 0;
        }

        if (*cg_cmd) {
            if (delta_str.empty() == d_str.empty()) {
                std::cerr << "classgroup: give exactly one of --delta or --d\n";
                return 1;
            }
            Int delta = delta_str.empty() ? Int(4 * Int(d_str)) : Int(delta_str);
            ClassNumbers h = class_number(Discriminant(delta));
            json j;
            j["delta"] = delta.get_str();
            j["h_narrow"] = h.h_narrow.get_str();
            j["h_wide"] = h.h_wide.get_str();
            j["reduced_form_count"] = h.reduced_form_count;
            std::cout << j.dump() << '\n';
            return 0;
        }

        if (*sp_cmd) {
            Curve c = sc.make();
            Point p = sp.make();
            if (!on_curve(c, p)) {
                std::cerr << "point is not on the curve\n";
                return 2;
            }
            SpecializeOptions opt;
            opt.order_mode = sp_order_mode;
            SpecializationResult r = specialize_point(c, canonicalize(c, p), Int(sp_p), opt);
            std::cout << specialization_json(r).dump() << '\n';
            return 0;
        }

        if (*scan_cmd) {
            Curve c = xc.make();
            Point p = xp.make();
            if (!on_curve(c, p)) {
                std::cerr << "point is not on the curve\n";
                return 2;
            }
            if (!aux_point.empty()) {
                auto comma = aux_point.find(',');
                if (comma == std::string::npos) {
                    std::cerr << "--aux-point expects X,Y\n";
                    return 1;
                }
                Point aux = Point::affine(parse_rational(aux_point.substr(0, comma)),
                                          parse_rational(aux_point.substr(comma + 1)));
                if (!on_curve(c, aux)) {
                    std::cerr << "auxiliary point is not on the curve\n";
                    return 2;
                }
            }
            ScanOptions opt;
            opt.order_mode = scan_order_mode;
            opt.allow_torsion = allow_torsion;
            opt.jobs = jobs;
            ScanResult result = scan(c, p, Int(pmax_str), opt);
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!out_file.empty()) {
                file.open(out_file);
                if (!file) {
                    std::cerr << "cannot open " << out_file << '\n';
                    return 1;
                }
                os = &file;
            }
            if (format == "csv")
                write_csv(*os, result);
            else
                write_json(*os, result);
            return 0;
        }
    } catch (const AssertionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const SingularCurveError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const NotOnCurveError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const TorsionPointError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const NotPrimeError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const PrimeTooSmallError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad argument: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
