#include "rankone/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankone {

namespace {

// Mean of near-coincident circle locations, taken through the vector sum so
// the result is well defined across the 0 / 2pi seam.
Complex circular_mean(const std::vector<Atom>& atoms, std::size_t lo, std::size_t hi) {
    Complex s{0.0, 0.0};
    for (std::size_t i = lo; i < hi; ++i) s += atoms[i].location;
    return s / std::abs(s);
}

}  // namespace

AtomicMeasure::AtomicMeasure(SupportKind kind, std::vector<Atom> atoms, double merge_tol)
    : kind_(kind) {
    for (const Atom& a : atoms) {
        if (!(a.weight >= 0.0))
            throw std::invalid_argument("AtomicMeasure: weights must be nonnegative");
        if (kind == SupportKind::RealLine && a.location.imag() != 0.0)
            throw std::invalid_argument("AtomicMeasure: real-line atom with nonzero imaginary part");
        if (kind == SupportKind::UnitCircle && !is_unimodular(a.location))
            throw std::invalid_argument("AtomicMeasure: circle atom off the unit circle");
    }

    if (kind == SupportKind::RealLine) {
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return a.location.real() < b.location.real(); });
    } else {
        std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
            return arg_2pi(a.location) < arg_2pi(b.location);
        });
    }

    // Merge consecutive clusters closer than merge_tol.
    std::size_t i = 0;
    while (i < atoms.size()) {
        std::size_t j = i + 1;
        while (j < atoms.size() && std::abs(atoms[j].location - atoms[j - 1].location) <= merge_tol)
            ++j;
        double w = 0.0;
        for (std::size_t k = i; k < j; ++k) w += atoms[k].weight;
        Complex loc;
        if (j - i == 1) {
            loc = atoms[i].location;
        } else if (kind == SupportKind::RealLine) {
            double s = 0.0;
            for (std::size_t k = i; k < j; ++k) s += atoms[k].location.real();
            loc = Complex(s / static_cast<double>(j - i), 0.0);
        } else {
            loc = circular_mean(atoms, i, j);
        }
        if (w > 0.0 || j - i == 1) atoms_.push_back(Atom{loc, w});
        i = j;
    }

    // On the circle the first and last cluster may meet across the seam.
    if (kind == SupportKind::UnitCircle && atoms_.size() >= 2) {
        if (std::abs(atoms_.front().location - atoms_.back().location) <= merge_tol) {
            Atom merged;
            merged.weight = atoms_.front().weight + atoms_.back().weight;
            Complex s = atoms_.front().location + atoms_.back().location;
            merged.location = s / std::abs(s);
            atoms_.back() = merged;
            atoms_.erase(atoms_.begin());
        }
    }

    std::erase_if(atoms_, [](const Atom& a) { return a.weight == 0.0; });
}

AtomicMeasure AtomicMeasure::real_line(std::vector<std::pair<double, double>> location_weight,
                                       double merge_tol) {
    std::vector<Atom> atoms;
    atoms.reserve(location_weight.size());
    for (auto& [loc, w] : location_weight) atoms.push_back(Atom{Complex(loc, 0.0), w});
    return AtomicMeasure(SupportKind::RealLine, std::move(atoms), merge_tol);
}

AtomicMeasure AtomicMeasure::unit_circle(std::vector<Atom> atoms, double merge_tol) {
    return AtomicMeasure(SupportKind::UnitCircle, std::move(atoms), merge_tol);
}

double AtomicMeasure::total_mass() const {
    double m = 0.0;
    for (const Atom& a : atoms_) m += a.weight;
    return m;
}

AtomicMeasure spectral_measure(const SpectralDecomposition& d, const VecX& phi, double merge_tol) {
    if (phi.size() != d.dim()) throw std::invalid_argument("spectral_measure: dimension mismatch");
    if (phi.norm() == 0.0) throw std::invalid_argument("spectral_measure: phi must be nonzero");

    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(d.dim()));
    for (int k = 0; k < d.dim(); ++k) {
        Complex c = inner(phi, d.eigenvectors.col(k));
        Complex loc = d.eigenvalues(k);
        if (d.kind == SupportKind::RealLine) loc = Complex(loc.real(), 0.0);
        else loc /= std::abs(loc);
        atoms.push_back(Atom{loc, std::norm(c)});
    }
    return AtomicMeasure(d.kind, std::move(atoms), merge_tol);
}

AtomicMeasure spectral_measure(const HermitianOperator& op, const VecX& phi, double merge_tol) {
    return spectral_measure(decompose(op), phi, merge_tol);
}

AtomicMeasure spectral_measure(const UnitaryOperator& op, const VecX& phi, double merge_tol) {
    return spectral_measure(decompose(op), phi, merge_tol);
}

}  // namespace rankone
