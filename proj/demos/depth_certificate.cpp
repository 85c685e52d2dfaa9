// Run the depth pipeline on the smallest interesting case and replay the
// resulting certificate in-process.

#include <iostream>

#include "invar/certificates.hpp"

using namespace invar;

int main()
{
    auto cert = cmdef_pipeline_ga(2, 2);
    std::cout << certificate_report(cert);

    auto rep = verify_certificate(cert);
    std::cout << "replay: " << (rep.ok ? "all claims verified" : "FAILED") << "\n";
    for (const auto& f : rep.failures)
        std::cout << "  - " << f << "\n";
    return rep.ok ? 0 : 1;
}
