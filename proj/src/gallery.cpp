#include "fcheck/gallery.hpp"

namespace fcheck::verify {

const std::vector<GalleryEntry>& gallery() {
    static const std::vector<GalleryEntry> g{
        {"zero-map", Domain::Real, "builtin:zero", "dirac-limit",
         "T = 0 commutes with differentiation but has no Dirac limit"},
        {"modulated-kernel", Domain::Real, "builtin:modulated", "dirac-limit",
         "K = (1 + y^2) e^{-2 pi i x y}: the Dirac limit recovers g(y) = 1 + y^2"},
        {"x-weighted-kernel", Domain::Real, "builtin:x-weighted", "diff-property",
         "K = (1 + x^2) e^{-2 pi i x y}: Dirac limit 1, differentiation property broken"},
        {"scaled-dtft", Domain::Discrete, "builtin:scaled:2", "indicator",
         "K = 2 e^{-2 pi i n y}: the difference property holds, T(1_0) = 2"},
        {"conjugate-dtft", Domain::Discrete, "builtin:conjugate", "difference-property",
         "K = e^{+2 pi i n y}: T(1_0) = 1, wrong difference factor"},
        {"relabeled-characters", Domain::Lca, "builtin:relabeled", "shift",
         "kernel conj(chi'(x)) with chi' the next character: Dirac value 1, shift broken"},
        {"scaled-lca", Domain::Lca, "builtin:scaled:2", "dirac",
         "kernel 2 conj(chi(x)): shift property holds, T(delta_e) = 2"},
        {"dual-permuted", Domain::Compact, "builtin:dual-permuted:S3", "shift",
         "the trivial and sign blocks swapped: a *-homomorphism carrying the wrong labels"},
        {"annihilated-block", Domain::Compact, "builtin:annihilated:S3", "irreducibility",
         "the 2-dimensional block replaced by 0: the image there is not irreducible"},
        {"scaled-blocks", Domain::Compact, "builtin:scaled:2:S3", "convolution",
         "2 F: shift and star survive, products pick up a factor"},
        {"scaled-hankel", Domain::Hankel, "builtin:scaled:3", "normalization",
         "K = 3 J_1: bounded Bessel solution with C1 = 3"},
        {"second-solution-admixture", Domain::Hankel, "builtin:admixture", "kernel-bounded",
         "K = a J_1 + b Y2 with a tuned to the witness: unbounded at the origin"},
        {"exponential-kernel", Domain::Hankel, "builtin:exponential", "bessel-property",
         "K = c e^{-r}, c tuned to the witness: bounded, not a Bessel solution"},
    };
    return g;
}

const std::vector<GalleryGap>& gallery_gaps() {
    static const std::vector<GalleryGap> g{
        {Domain::Compact, "star",
         "shift and convolution force each block to be 0 or the Fourier block, and both are "
         "*-preserving, so no linear map violates star alone"},
        {Domain::Compact, "linearity",
         "every block transform in the catalog is linear by construction; linearity is checked, "
         "not isolated"},
    };
    return g;
}

std::vector<GalleryOutcome> run_gallery(const SuiteConfig& cfg) {
    std::vector<GalleryOutcome> out;
    for (const auto& e : gallery()) {
        GalleryOutcome o{e, run_suite(e.domain, e.target, cfg), {}};
        o.failing = failing_axioms(o.reports);
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace fcheck::verify
