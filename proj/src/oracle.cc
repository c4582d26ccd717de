#include <qproj/enumerate.hh>
#include <qproj/hom.hh>
#include <qproj/oracle.hh>

#include "parallel.hh"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>

using std::size_t;
using std::vector;

namespace qproj
{
    namespace
    {
        struct TargetOutcome
        {
            bool failed = false;
            bool abandoned = false;
            std::uint64_t pairs = 0;
            Mapping f, j;
        };

        // Every onto j, then every f, in lexicographic order; stops at the first pair with no lift.
        template <typename Stop_>
        auto examine(const Structure & s, const Structure & target, Stop_ && should_stop) -> TargetOutcome
        {
            TargetOutcome outcome;
            LiftSearcher lifts(s);
            HomSearch onto(s, target, true);
            HomSearch any(s, target, false);
            while (onto.next()) {
                if (should_stop()) {
                    outcome.abandoned = true;
                    return outcome;
                }
                auto fibers = fibers_of(onto.current());
                any.reset();
                while (any.next()) {
                    ++outcome.pairs;
                    if (! lifts.exists(fibers, any.values())) {
                        outcome.failed = true;
                        outcome.j = onto.current();
                        outcome.f = any.current();
                        return outcome;
                    }
                }
            }
            return outcome;
        }
    }

    auto target_catalog(Kind kind, int n) -> const vector<Structure> &
    {
        static std::mutex mutex;
        static std::map<std::pair<Kind, int>, std::unique_ptr<const vector<Structure>>> catalog;

        std::lock_guard lock(mutex);
        auto & entry = catalog[{kind, n}];
        if (! entry)
            entry = std::make_unique<const vector<Structure>>(enumerate_class(kind, n));
        return *entry;
    }

    auto oracle(const Structure & s, const OracleOptions & options) -> OracleReport
    {
        if (auto v = validate(s))
            throw std::invalid_argument("oracle: invalid structure: " + v->describe());
        int max_target = options.max_target_size == 0 ? s.size() : options.max_target_size;
        if (max_target < 1 || max_target > s.size())
            throw std::invalid_argument("oracle: target size bound must lie in [1, n]");
        if (max_target > enumeration_bound(s.kind()))
            throw BoundExceeded("oracle: " + std::string(kind_name(s.kind())) + " targets limited to n <= "
                    + std::to_string(enumeration_bound(s.kind())));

        OracleReport report;
        for (int m = 1 ; m <= max_target ; ++m) {
            vector<Structure> labeled;
            if (! options.dedup_targets)
                labeled = enumerate_labeled(s.kind(), m);
            auto & targets = options.dedup_targets ? target_catalog(s.kind(), m) : labeled;

            vector<TargetOutcome> outcomes(targets.size());
            std::atomic<size_t> first_failure{targets.size()};

            detail::parallel_for(targets.size(), options.jobs, [&] (size_t i) {
                    if (i > first_failure)
                        return;
                    outcomes[i] = examine(s, targets[i], [&] { return first_failure < i; });
                    if (outcomes[i].failed) {
                        auto current = first_failure.load();
                        while (i < current && ! first_failure.compare_exchange_weak(current, i))
                            ;
                    }
                    });

            // only targets up to the first failure count, so the totals do not depend on scheduling
            size_t stop = first_failure;
            for (size_t i = 0 ; i < targets.size() && i <= stop ; ++i) {
                ++report.targets_examined;
                report.pairs_examined += outcomes[i].pairs;
            }
            if (stop < targets.size()) {
                report.qp = false;
                report.witness = WitnessTriple{targets[stop], outcomes[stop].f, outcomes[stop].j};
                return report;
            }
        }
        return report;
    }

    auto verify_class(Kind kind, int n_max, GeometryMode mode, int jobs) -> VerifyReport
    {
        vector<Structure> structures;
        for (int n = 1 ; n <= n_max ; ++n)
            for (auto & s : target_catalog(kind, n))
                structures.push_back(s);

        vector<std::optional<Mismatch>> results(structures.size());
        detail::parallel_for(structures.size(), jobs, [&] (size_t i) {
                auto decided = decide(structures[i], mode);
                auto checked = oracle(structures[i]);
                if (decided.qp != checked.qp)
                    results[i] = Mismatch{structures[i], decided, checked};
                });

        VerifyReport report;
        report.classes = int(structures.size());
        for (auto & r : results)
            if (r)
                report.mismatches.push_back(std::move(*r));
        return report;
    }
}
