#ifndef LSPACE_TREE_HPP
#define LSPACE_TREE_HPP

#include "lspace/interval.hpp"
#include "lspace/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lspace {

/// Base surface of the root Seifert piece.
enum class Base { Orientable, NonOrientable };

struct TreeManifold;

/// A daughter attached to the root by a unimodular gluing matrix. The matrix
/// carries daughter slope coordinates to parent slope coordinates, both in
/// the respective (f̃, -h̃) bases.
struct Subtree {
    GluingMatrix gluing;
    std::shared_ptr<const TreeManifold> manifold;
};

/// A daughter given directly by its pushed-forward L-space interval (already
/// in parent coordinates). An empty interval is accepted but forces an empty
/// L-space interval for the whole tree.
using Daughter = std::variant<Subtree, LInterval>;

struct ValidationError : std::runtime_error {
    ValidationError(std::string path_in, const std::string& what_in)
        : std::runtime_error(path_in + ": " + what_in), path(std::move(path_in)) {}
    std::string path;
};

/// Raised when an operation needs a rational longitude but some daughter is
/// only known through its interval.
struct LongitudeUnknown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A rooted plumbing tree: the root Seifert data (base type plus exceptional
/// fiber filling slopes, e_0 normalized away so integer entries are allowed)
/// and the daughters hanging off it.
struct TreeManifold {
    Base base = Base::Orientable;
    std::vector<Rational> slopes;
    std::vector<Daughter> daughters;

    /// Solid torus: orientable, no daughters, at most one non-integer slope.
    bool is_solid_torus() const;

    /// Checks the structural invariants, throwing ValidationError with a
    /// path such as `daughters[1].gluing`: all slopes finite, gluing matrices
    /// unimodular, and no solid-torus subtree daughters (absorb those into
    /// the parent as a Dehn filling instead).
    void validate(const std::string& path = "manifold") const;

    friend bool operator==(const TreeManifold& a, const TreeManifold& b);
};

bool operator==(const Subtree& a, const Subtree& b);

}  // namespace lspace

#endif
