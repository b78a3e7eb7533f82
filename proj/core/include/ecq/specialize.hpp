#pragma once

#include <optional>
#include <vector>

#include "ecq/elliptic.hpp"
#include "ecq/quadorder.hpp"

namespace ecq {

enum class Status {
    Ok,
    DNonPositive,
    DSquare,
    DNotSquarefree,
    PointAbovePrime,
    NonInvertible,
    NoOddNormRepresentative,
    FactorizationTimeout,
};

const char* to_string(Status s);

// Outcome of specializing a canonical point at a prime p.
struct SpecializationResult {
    Int p;
    Int d; // p^3 + a p + b
    std::optional<Factorization> d_factorization;
    bool squarefree = false;
    Int A; // k - p e^2 (signed; the ideal uses |A|)
    Int B; // root mod |A|
    std::optional<QuadIdeal> ideal;
    std::optional<QuadForm> form;         // discriminant 4d
    std::optional<QuadForm> maximal_form; // discriminant Delta_K, when d squarefree
    std::optional<FieldData> field;
    Status status = Status::Ok;
    bool bad_reduction = false;    // p divides 4a^3 + 27b^2
    bool denominator_prime = false; // p divides e
    bool order_mode = false;
};

struct SpecializeOptions {
    bool order_mode = false; // compute in Z[sqrt d] even when d is not squarefree
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

// d = p^3 + a p + b; requires p an odd prime >= 3.
Int discriminant_value(const Curve& c, const Int& p);

SpecializationResult specialize_point(const Curve& c, const CanonicalPoint& pt, const Int& p,
                                      const SpecializeOptions& opt = {});

struct ClassVerdict {
    Int order_in_order_class_group;
    std::optional<Int> order_in_maximal;
    bool nontrivial; // wide non-principality, in the maximal order when available
};

ClassVerdict class_verdict(const SpecializationResult& r);

// One comparison row of the empirical homomorphism check: the class of the
// specialization of nP against the n-th power of the class of P's
// specialization, both of discriminant 4d.
struct HomomorphismRow {
    Int n;
    Status status;            // of the nP specialization
    bool comparable = false;  // both sides Ok and invertible
    bool match_wide = false;  // classes agree in the wide group
    bool match_narrow = false;
};

std::vector<HomomorphismRow> homomorphism_check(const Curve& c, const Point& p, const Int& prime,
                                                const std::vector<Int>& multiples,
                                                const SpecializeOptions& opt = {});

} // namespace ecq
