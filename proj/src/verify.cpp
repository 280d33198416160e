#include "rigidmod/verify.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "rigidmod/catalog.hpp"
#include "rigidmod/global_series.hpp"
#include "rigidmod/multiplier.hpp"
#include "rigidmod/numeric_eval.hpp"
#include "rigidmod/partitions.hpp"
#include "rigidmod/quiver.hpp"
#include "rigidmod/rigid_theta.hpp"

namespace rigidmod {

namespace {

std::string mismatch_detail(const Mismatch& m) {
    std::ostringstream os;
    os << "q^(" << exp24_to_string(m.exp24) << "): " << q_to_string(m.lhs) << " vs "
       << q_to_string(m.rhs);
    return os.str();
}

CheckLine from_check(const std::string& name, const CheckResult& r) {
    CheckLine line{name, r.pass, ""};
    if (!r.pass && r.mismatch) line.detail = mismatch_detail(*r.mismatch);
    return line;
}

// hypercube side for the dimension identity, capped so the scan stays small
long long dim_check_bound(int n) {
    long long bound = 6;
    while (bound > 1) {
        double cells = std::pow(static_cast<double>(bound + 1), n + 1);
        if (cells <= 200000.0) break;
        --bound;
    }
    return bound;
}

}  // namespace

RootReport verify_root(const RootSystem& rs, const VerifyOptions& opts) {
    RootReport rep;
    rep.root = rs.token();

    rep.checks.push_back(from_check("theta-eta", verify_theta_eta_identity(rs, opts.trunc_q)));
    rep.checks.push_back(from_check("z-eta", verify_z_eta_identity(rs, opts.trunc_q)));
    rep.checks.push_back(
        from_check("factorization", factorization_check(rs, opts.trunc_q)));

    OrderProfileCheck op = verify_order_profile(rs);
    rep.checks.push_back({"order-profile", op.pass, op.detail});

    // exact multiplier consistency: Petersson product vs closed form vs the
    // specialized closed form
    {
        DeltaCatalogEntry ent = catalog_entry(rs);
        Gamma0Sampler sampler(rs.k, opts.seed);
        CheckLine line{"chi-consistency", true, ""};
        for (int i = 0; i < opts.multiplier_samples && line.pass; ++i) {
            GammaElement A = sampler.next();
            try {
                UnitRoot24 v = product_multiplier(ent.r_eta, A);  // asserts both routes
                UnitRoot24 chi = chi_delta(rs, A);
                if (!(v == chi)) {
                    line.pass = false;
                    line.detail = "chi_delta(" + A.to_string() + ") = " + chi.to_string() +
                                  " but product multiplier = " + v.to_string();
                }
            } catch (const std::exception& e) {
                line.pass = false;
                line.detail = e.what();
            }
        }
        rep.checks.push_back(line);
    }

    // numeric transformation law at tau = 0.1 + 1.0i
    {
        DeltaCatalogEntry ent = catalog_entry(rs);
        Gamma0Sampler sampler(rs.k, opts.seed + 1, /*c_range=*/2, /*d_range=*/25,
                              /*shift_range=*/2);
        Cplx tau(0.1, 1.0);
        CheckLine line{"transformation-law", true, ""};
        for (int i = 0; i < opts.numeric_samples && line.pass; ++i) {
            GammaElement A = sampler.next();
            double resid = transformation_residual(ent.r_eta, A, chi_delta(rs, A),
                                                   ent.r_eta.weight(), tau);
            if (!(resid < opts.tolerance)) {
                line.pass = false;
                std::ostringstream os;
                os << "residual " << resid << " at (" << A.to_string() << ")";
                line.detail = os.str();
            }
        }
        rep.checks.push_back(line);
    }

    rep.checks.push_back(
        {"dim-2k", verify_dim_is_2k(rs, dim_check_bound(rs.n)), ""});

    {
        long long t = std::min<long long>(opts.trunc_q, 50);
        auto bad = first_mismatch(zero_dim_support(rs, t), rigid_series(rs, t), 24 * t);
        CheckLine line{"quiver-support", !bad.has_value(), ""};
        if (bad) line.detail = mismatch_detail(*bad);
        rep.checks.push_back(line);
    }

    if (rs.kind == AdeKind::A) {
        long long t = std::min<long long>(opts.trunc_q, 30);
        auto bad = verify_an_orbifold(rs.n, t);
        CheckLine line{"an-oracle", !bad.has_value(), ""};
        if (bad) line.detail = "first mismatch at q^" + std::to_string(*bad);
        rep.checks.push_back(line);
    }

    rep.pass = true;
    for (auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

std::vector<RootReport> verify_many(const std::vector<RootSystem>& roots,
                                    const VerifyOptions& opts) {
    std::vector<std::future<RootReport>> futs;
    futs.reserve(roots.size());
    for (const RootSystem& rs : roots)
        futs.push_back(std::async(std::launch::async,
                                  [rs, opts]() { return verify_root(rs, opts); }));
    std::vector<RootReport> out;
    out.reserve(roots.size());
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

}  // namespace rigidmod
