#ifndef SEXTIC_IDENTITIES_HPP
#define SEXTIC_IDENTITIES_HPP

#include <string>
#include <vector>

namespace sextic {

struct IdentityCheck {
    std::string id;
    std::string anchor;
    /// "exact" (coefficient-wise zero difference) or "sampled" (numeric, 20 points).
    std::string method;
    bool pass = false;
    /// 0 for exact entries; worst relative residual for sampled ones.
    double residual = 0.0;
    /// Names of failing sub-identities, empty on success.
    std::string detail;
};

/// Ramanujan's 6-3-4-5 identity with R1(1,0) replaced by `leading`.
IdentityCheck check_ramanujan(long leading = 6);

/// All identity groups in fixed order. jobs > 1 evaluates groups concurrently.
std::vector<IdentityCheck> run_identity_suite(int jobs = 1);

bool all_passed(const std::vector<IdentityCheck>& report);

}  // namespace sextic

#endif  // SEXTIC_IDENTITIES_HPP
