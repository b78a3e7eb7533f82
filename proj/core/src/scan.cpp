#include "ecq/scan.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

namespace ecq {

namespace {

ScanRow make_row(const Curve& c, const CanonicalPoint& cp, const Int& p, const ScanOptions& opt) {
    SpecializeOptions sopt;
    sopt.order_mode = opt.order_mode;
    sopt.factor_budget = opt.factor_budget;
    SpecializationResult r = specialize_point(c, cp, p, sopt);

    ScanRow row;
    row.p = r.p;
    row.d = r.d;
    row.status = r.status;
    row.bad_reduction = r.bad_reduction;
    row.denominator_prime = r.denominator_prime;
    if (r.d_factorization) {
        row.d_factorization = r.d_factorization->to_string();
        row.squarefree = r.squarefree;
    }
    if (r.field) row.fundamental_discriminant = r.field->fundamental_discriminant;
    if (r.status == Status::PointAbovePrime || r.status == Status::NonInvertible ||
        r.status == Status::NoOddNormRepresentative || r.status == Status::Ok) {
        row.A = r.A;
    }
    if (r.status != Status::Ok) return row;

    row.B = r.B;
    row.form = r.form;

    ClassVerdict v = class_verdict(r);
    row.class_order_order = v.order_in_order_class_group;
    row.class_order_maximal = v.order_in_maximal;
    row.nontrivial = v.nontrivial;

    if (r.d <= opt.class_number_max_d) {
        Int headline = r.maximal_form ? r.field->fundamental_discriminant : Int(4 * r.d);
        ClassNumbers h = class_number(Discriminant(headline));
        row.h_narrow = h.h_narrow;
        row.h_wide = h.h_wide;
    }
    return row;
}

} // namespace

ScanSummary summarize(const std::vector<ScanRow>& rows) {
    ScanSummary s;
    s.primes_considered = rows.size();
    for (const ScanRow& row : rows) {
        if (row.status == Status::Ok) {
            ++s.ok_count;
            if (row.nontrivial) {
                ++s.nontrivial_count;
                s.nontrivial_primes.push_back(row.p);
            }
            if (row.h_wide) {
                if (!s.h_wide_min || *row.h_wide < *s.h_wide_min) s.h_wide_min = row.h_wide;
                if (!s.h_wide_max || *row.h_wide > *s.h_wide_max) s.h_wide_max = row.h_wide;
            }
        } else {
            ++s.skipped[to_string(row.status)];
        }
    }
    std::uint64_t total = s.ok_count;
    for (const auto& [_, n] : s.skipped) total += n;
    if (total != s.primes_considered) throw AssertionError("summarize: counts do not partition");
    return s;
}

ScanResult scan(const Curve& c, const Point& p, const Int& p_max, const ScanOptions& opt) {
    if (!on_curve(c, p) || p.is_infinity()) throw NotOnCurveError("scan: point not affine on curve");
    ScanResult result;
    if (auto order = is_torsion(c, p)) {
        if (!opt.allow_torsion)
            throw TorsionPointError("scan: point has finite order " + std::to_string(*order));
        result.torsion_override_used = true;
    }
    CanonicalPoint cp = canonicalize(c, p);

    std::vector<Int> primes;
    for (Int q = 3; q <= p_max; q += 2)
        if (is_prime(q)) primes.push_back(q);

    result.rows.resize(primes.size());
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1 || primes.size() < 2) {
        for (size_t i = 0; i < primes.size(); ++i) result.rows[i] = make_row(c, cp, primes[i], opt);
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= primes.size()) return;
                try {
                    result.rows[i] = make_row(c, cp, primes[i], opt);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (err) std::rethrow_exception(err);
    }
    result.summary = summarize(result.rows);
    return result;
}

namespace {

std::string opt_str(const std::optional<Int>& v) { return v ? v->get_str() : std::string(); }

std::string flags_str(const ScanRow& row) {
    std::string f;
    if (row.bad_reduction) f += "bad_reduction";
    if (row.denominator_prime) {
        if (!f.empty()) f += ';';
        f += "denominator_prime";
    }
    return f;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

} // namespace

void write_csv(std::ostream& os, const ScanResult& result) {
    os << "p,d,d_factorization,squarefree,fundamental_discriminant,A,B,form_a,form_b,form_c,"
          "h_narrow,h_wide,class_order_order,class_order_maximal,nontrivial,status,flags\n";
    for (const ScanRow& r : result.rows) {
        os << r.p.get_str() << ',' << r.d.get_str() << ',' << r.d_factorization << ','
           << (r.squarefree ? bool_str(*r.squarefree) : "") << ','
           << opt_str(r.fundamental_discriminant) << ',' << opt_str(r.A) << ',' << opt_str(r.B)
           << ',';
        if (r.form)
            os << r.form->a.get_str() << ',' << r.form->b.get_str() << ',' << r.form->c.get_str();
        else
            os << ",,";
        os << ',' << opt_str(r.h_narrow) << ',' << opt_str(r.h_wide) << ','
           << opt_str(r.class_order_order) << ',' << opt_str(r.class_order_maximal) << ','
           << (r.status == Status::Ok ? bool_str(r.nontrivial) : "") << ',' << to_string(r.status)
           << ',' << flags_str(r) << '\n';
    }
}

void write_json(std::ostream& os, const ScanResult& result) {
    using nlohmann::json;
    auto put = [](json& j, const char* key, const std::optional<Int>& v) {
        if (v) j[key] = v->get_str();
    };
    for (const ScanRow& r : result.rows) {
        json j;
        j["p"] = r.p.get_str();
        j["d"] = r.d.get_str();
        if (!r.d_factorization.empty()) j["d_factorization"] = r.d_factorization;
        if (r.squarefree) j["squarefree"] = *r.squarefree;
        put(j, "fundamental_discriminant", r.fundamental_discriminant);
        put(j, "A", r.A);
        put(j, "B", r.B);
        if (r.form)
            j["form"] = {r.form->a.get_str(), r.form->b.get_str(), r.form->c.get_str()};
        put(j, "h_narrow", r.h_narrow);
        put(j, "h_wide", r.h_wide);
        put(j, "class_order_order", r.class_order_order);
        put(j, "class_order_maximal", r.class_order_maximal);
        if (r.status == Status::Ok) j["nontrivial"] = r.nontrivial;
        j["status"] = to_string(r.status);
        json flags = json::array();
        if (r.bad_reduction) flags.push_back("bad_reduction");
        if (r.denominator_prime) flags.push_back("denominator_prime");
        j["flags"] = flags;
        os << j.dump() << '\n';
    }
    const ScanSummary& s = result.summary;
    json j;
    j["summary"] = true;
    j["primes_considered"] = s.primes_considered;
    j["ok_count"] = s.ok_count;
    j["skipped"] = s.skipped;
    j["nontrivial_count"] = s.nontrivial_count;
    json np = json::array();
    for (const Int& p : s.nontrivial_primes) np.push_back(p.get_str());
    j["nontrivial_primes"] = np;
    if (s.h_wide_min) j["h_wide_min"] = s.h_wide_min->get_str();
    if (s.h_wide_max) j["h_wide_max"] = s.h_wide_max->get_str();
    j["torsion_override"] = result.torsion_override_used;
    os << j.dump() << '\n';
}

} // namespace ecq
