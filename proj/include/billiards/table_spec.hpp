#ifndef BILLIARDS_TABLE_SPEC_HPP
#define BILLIARDS_TABLE_SPEC_HPP

#include <memory>
#include <string>

#include "billiards/persistence.hpp"
#include "billiards/tables.hpp"

namespace billiards {

/// Parsed table specification.  JSON schema:
///   {"type": "ellipse",           "a": 2.0, "b": 1.0}
///   {"type": "perturbed_ellipse", "a": 2.0, "b": 1.0, "eps": 1e-3,
///    "mu1": {"const": 0.0, "cos": [1.0], "sin": []}}
///   {"type": "perturbed_circle",  "r0": 1.0, "eps": 1e-3,
///    "r1":  {"const": 0.0, "cos": [0.0, 1.0], "sin": []}}
/// "mu1" is accepted as an alias for "r1" on perturbed circles.
struct TableSpec {
    enum class Type { Ellipse, PerturbedEllipse, PerturbedCircle };

    Type type = Type::Ellipse;
    double a = 0.0;
    double b = 0.0;
    double r0 = 0.0;
    double eps = 0.0;
    FourierSeries profile;

    static TableSpec from_json_text(const std::string& text);
    static TableSpec from_file(const std::string& path);

    /// Table at the spec's own eps.
    std::unique_ptr<Table> make_table() const;

    /// Eps-family for persistence runs; the exact ellipse is rejected
    /// (it has no perturbation profile).
    persistence::TableFamily make_family() const;

    /// Base axes (a, b) for the ellipse types, (r0, r0) for circles.
    double base_a() const;
    double base_b() const;
};

}  // namespace billiards

#endif
