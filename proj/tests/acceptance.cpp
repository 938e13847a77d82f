// Acceptance suite: runs every catalog-wide property the library promises,
// one line per criterion. All arithmetic is exact, so every check is an
// equality check; there are no tolerances anywhere.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "hopfcat/sweep.hpp"

using namespace hopfcat;

namespace {

int failures_total = 0;

void report(int number, const std::string& title, const SweepResult& r) {
    const bool pass = r.ok();
    std::cout << "criterion " << number << " (" << title << "): " << (pass ? "PASS" : "FAIL")
              << " - " << r.checked << " instances, " << r.failures.size() << " failures\n";
    for (size_t i = 0; i < r.failures.size(); ++i) {
        if (i == 10) {
            std::cout << "    ... " << r.failures.size() - 10 << " more\n";
            break;
        }
        std::cout << "    FAIL " << r.failures[i] << "\n";
    }
    if (!pass) ++failures_total;
}

void plain(int number, const std::string& title, bool pass, const std::string& detail) {
    std::cout << "criterion " << number << " (" << title << "): " << (pass ? "PASS" : "FAIL")
              << " - " << detail << "\n";
    if (!pass) ++failures_total;
}

}  // namespace

int main() {
    const Catalog catalog = Catalog::builtin();
    std::cout << "catalog: " << catalog.objects().size() << " group algebras, "
              << catalog.morphisms().size() << " morphisms, " << catalog.split_epis().size()
              << " split epimorphisms, " << catalog.actions().size() << " actions\n";

    try {
        report(1, "hopf axiom suite", sweep_hopf_axioms(catalog));

        report(2, "kernel normality", sweep_kernel_normality(catalog));

        {
            SweepResult r = sweep_newman(catalog);
            if (r.checked < 28)
                r.failures.push_back("expected at least 28 subgroup instances, saw " +
                                     std::to_string(r.checked));
            report(3, "newman roundtrips", r);
        }

        report(4, "group/Hopf dictionary", sweep_group_dictionary(catalog));

        {
            SweepResult r = sweep_split_epi(catalog);
            // the named witness k[C3]#k[C2] = k[S3] must have been part of the run
            bool saw_witness = false;
            for (const auto& act : catalog.actions()) saw_witness |= act.name == "inversion:c3";
            if (!saw_witness) r.failures.push_back("missing the k[C3]#k[C2] witness");
            report(5, "split-epi decomposition", r);
        }

        report(6, "pullbacks of cokernels", sweep_pullback_cokernel(catalog));

        report(7, "images of kernels", sweep_image_kernel(catalog));

        {
            SweepResult r = sweep_abelian(catalog);
            const auto& s3 = catalog.object("s3").algebra;
            const auto& c6 = catalog.object("c6").algebra;
            const auto& c2 = catalog.object("c2").algebra;
            r.record("witness:s3-negative", abelian_object_test(s3) == false);
            r.record("witness:c6-positive", abelian_object_test(c6) == true);
            r.record("witness:c2*c2-positive", abelian_object_test(tensor_hopf(c2, c2)) == true);
            r.record("witness:ground-field-positive", abelian_object_test(ground_field()) == true);
            report(8, "abelian core", r);
        }

        report(9, "image factorization", sweep_image_factorization(catalog));

        {
            // two consecutive runs of the real command must emit the same bytes
            const std::string out1 = "/tmp/hopfcat_acceptance_report1.json";
            const std::string out2 = "/tmp/hopfcat_acceptance_report2.json";
            const std::string bin = HOPFCAT_BIN;
            const int c1 = std::system((bin + " axioms --out " + out1 + " 2>/dev/null").c_str());
            const int c2 = std::system((bin + " axioms --out " + out2 + " 2>/dev/null").c_str());
            const std::string first = io::read_file(out1);
            const std::string second = io::read_file(out2);
            const bool pass = c1 == 0 && c2 == 0 && !first.empty() && first == second;
            plain(10, "report determinism", pass,
                  "two axioms command runs, " + std::to_string(first.size()) + " bytes each" +
                      (first == second ? ", byte-identical" : ", DIFFER"));
            std::remove(out1.c_str());
            std::remove(out2.c_str());
        }
    } catch (const Error& e) {
        std::cout << "acceptance aborted by unexpected error: " << e.what() << "\n";
        return 99;
    }

    std::cout << (failures_total == 0 ? "acceptance: ALL CRITERIA PASS\n"
                                      : "acceptance: FAILURES PRESENT\n");
    return failures_total;
}
