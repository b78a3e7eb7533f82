#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ecq/specialize.hpp"

namespace ecq {

struct ScanRow {
    Int p;
    Int d;
    std::string d_factorization; // empty if not computed
    std::optional<bool> squarefree;
    std::optional<Int> fundamental_discriminant;
    std::optional<Int> A;
    std::optional<Int> B;
    std::optional<QuadForm> form;
    std::optional<Int> h_narrow; // of the headline discriminant, when enumerated
    std::optional<Int> h_wide;
    std::optional<Int> class_order_order;   // in the class group of Z[sqrt d]
    std::optional<Int> class_order_maximal; // in cl(K), when d squarefree
    bool nontrivial = false;
    Status status = Status::Ok;
    bool bad_reduction = false;
    bool denominator_prime = false;
};

struct ScanSummary {
    std::uint64_t primes_considered = 0;
    std::uint64_t ok_count = 0;
    std::map<std::string, std::uint64_t> skipped; // status name -> count
    std::uint64_t nontrivial_count = 0;
    std::vector<Int> nontrivial_primes;
    std::optional<Int> h_wide_min;
    std::optional<Int> h_wide_max;
};

struct ScanOptions {
    bool order_mode = false;
    bool allow_torsion = false;
    unsigned jobs = 1;
    // full class-number enumeration only for d up to this bound
    Int class_number_max_d = Int(1'000'000'000);
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanSummary summary;
    bool torsion_override_used = false;
};

// One row per prime 3 <= p <= p_max, in increasing order; deterministic
// regardless of the worker count. Throws TorsionPointError if the point has
// finite order and allow_torsion is not set.
ScanResult scan(const Curve& c, const Point& p, const Int& p_max, const ScanOptions& opt = {});

ScanSummary summarize(const std::vector<ScanRow>& rows);

// Column order is part of the interface:
// p,d,d_factorization,squarefree,fundamental_discriminant,A,B,form_a,form_b,
// form_c,h_narrow,h_wide,class_order_order,class_order_maximal,nontrivial,
// status,flags
void write_csv(std::ostream& os, const ScanResult& result);

// JSON lines: one object per row, summary object last; integers as decimal
// strings.
void write_json(std::ostream& os, const ScanResult& result);

} // namespace ecq
