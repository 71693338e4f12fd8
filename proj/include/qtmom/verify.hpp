#pragma once

#include <string>
#include <vector>

namespace qtmom {

struct IdentityCheck {
    std::string name;
    long cases = 0;
    bool pass = false;
};

// suite: coker | chu | jacobi-poly | genfun-duality | appendix-d | all
std::vector<IdentityCheck> run_verify_suite(const std::string& suite, long kmax);

} // namespace qtmom
