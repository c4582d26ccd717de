#pragma once

#include <qproj/structure.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qproj
{
    class BoundExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Lexicographically least encoding of a structure over all relabelings of its elements.
    ///
    /// Binary kinds encode each relation position by position: placing element p[k]
    /// contributes R(p[k],p[i]), R(p[i],p[k]) for i < k and then R(p[k],p[k]).
    /// Permutations put the whole first order before the second, which makes the
    /// labeling sorted by the first order the unique minimiser. Set families encode
    /// one bit per nonempty subset mask, in mask order.
    struct CanonicalForm
    {
        Kind kind;
        int n;
        std::vector<std::uint8_t> bits;

        auto operator<=>(const CanonicalForm &) const = default;
    };

    /// Largest n for which canonicalize() is offered.
    inline constexpr int max_canonical_size = 10;

    auto canonicalize(const Structure & s) -> CanonicalForm;

    /// A relabeling (element x -> result[x]) that turns `s` into its canonical labeling.
    auto canonical_labeling(const Structure & s) -> std::vector<int>;

    /// True iff no relabeling of `s` has a smaller encoding than `s` itself.
    auto is_canonical_labeling(const Structure & s) -> bool;

    /// Encoding of `s` as labeled (no minimisation).
    auto encode(const Structure & s) -> CanonicalForm;

    /// Largest n enumerate_class() and enumerate_labeled() accept for `kind`.
    auto enumeration_bound(Kind kind) -> int;

    /// Every valid labeled structure of `kind` on n elements. Throws BoundExceeded.
    auto for_each_labeled(Kind kind, int n, const std::function<void (const Structure &)> & visit) -> void;
    auto enumerate_labeled(Kind kind, int n) -> std::vector<Structure>;

    /// One canonically labeled representative per isomorphism class, sorted by canonical form.
    /// Throws BoundExceeded beyond enumeration_bound(kind).
    auto enumerate_class(Kind kind, int n) -> std::vector<Structure>;
}
