#ifndef EXTRACTA_CORPUS_HPP
#define EXTRACTA_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extracta/decomp.hpp"
#include "extracta/extraction.hpp"
#include "extracta/polynomial.hpp"

namespace extracta {

enum class InstanceClass { monomial, point, principal };

std::string to_string(InstanceClass c);

/// One generated cross-validation instance: an ideal with its oracle
/// decomposition, two control ideals (J with a decomposition of its own,
/// L plain) and a same-class companion ideal H for the identity suite.
struct CorpusInstance {
    std::string name;
    InstanceClass cls;
    Ring ring;
    Ideal I;
    PrimaryDecomposition D_I;
    Ideal J;
    PrimaryDecomposition D_J;
    Ideal H;
    PrimaryDecomposition D_H;
    Ideal L;
    std::optional<RationalPointSet> points; // point class only
    std::uint64_t probe_seed;
};

struct CorpusOptions {
    std::uint64_t seed = 42;
    int count = 200;
};

std::vector<CorpusInstance> generate_corpus(const CorpusOptions& opt);

/// Random probe polynomial: up to `max_terms` terms of total degree at
/// most `max_degree`, coefficients in [-3, 3] \ {0}.
Polynomial random_polynomial(std::mt19937_64& rng, const Ring& ring, int max_degree,
                             int max_terms);

/// A deterministic pool of distinct mixed semigroup orders (control and
/// non-control) on the given ring; used for the zero-dimensional
/// contraction cross-checks.
std::vector<OrderSpec> mixed_order_pool(const Ring& ring);

/// Per-instance cross-validation results.
struct InstanceCheck {
    std::string name;
    int membership_probes = 0;
    bool membership_ok = true; // extraction membership == oracle membership
    bool dim_ok = true;        // lifted-basis dimension == oracle dimension
    bool identities_ok = true; // identity suite, skips allowed
    bool invariance_ok = true; // order + generator-set invariance
    bool zero_dim_ok = true;   // point class: contraction vs loc membership
    std::vector<std::string> failures;

    bool ok() const {
        return membership_ok && dim_ok && identities_ok && invariance_ok && zero_dim_ok;
    }
};

struct CheckSelection {
    bool membership = true;
    bool dimension = true;
    bool identities = true;
    bool invariance = true;
    bool zero_dim = true;
};

InstanceCheck check_instance(const CorpusInstance& inst, const CheckSelection& sel = {});

struct CorpusReport {
    std::vector<InstanceCheck> results;
    bool all_ok() const;
    int total_membership_probes() const;
};

/// Runs check_instance over the corpus, `jobs` instances in flight at a
/// time (instances are independent and the checks are pure).
CorpusReport run_corpus(const std::vector<CorpusInstance>& corpus, int jobs = 1,
                        const CheckSelection& sel = {});

} // namespace extracta

#endif
