// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Numeric claims are checked exactly; stated time budgets are enforced.

#include "ctrace/errors.hpp"
#include "ctrace/complex.hpp"
#include "ctrace/graded.hpp"
#include "ctrace/ktheory.hpp"
#include "ctrace/unitary.hpp"

#include "support/naive_rank.hpp"
#include "support/run_cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ctrace;
using nlohmann::json;

namespace {

struct Failure : std::runtime_error {
    explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw Failure(msg);
}

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& name, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            body();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                    name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok)
            ++failures;
    }
};

double timed_seconds(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

cli_runner::Result run_cli_within(const std::string& args, double budget_seconds) {
    cli_runner::Result result;
    const double secs = timed_seconds([&] { result = cli_runner::run(args); });
    require(secs < budget_seconds,
            "command `" + args + "` took " + std::to_string(secs) + "s, budget " +
                std::to_string(budget_seconds) + "s");
    return result;
}

json parse_output(const cli_runner::Result& r, const std::string& what) {
    require(r.exit_code == 0, what + " exited with code " + std::to_string(r.exit_code));
    return json::parse(r.output);
}

std::vector<int> sigma_degrees(const json& doc) {
    std::vector<int> out;
    for (const auto& hit : doc.at("sigma"))
        out.push_back(hit.at("k_degree").get<int>());
    return out;
}

spaces::SimplicialComplex simplex_boundary(int k) {
    const int nv = k + 2;
    std::vector<std::string> vertices;
    for (int i = 0; i < nv; ++i)
        vertices.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<spaces::Simplex> facets;
    for (int skip = 0; skip < nv; ++skip) {
        spaces::Simplex f;
        for (int i = 0; i < nv; ++i)
            if (i != skip)
                f.push_back(vertices[i]);
        facets.push_back(std::move(f));
    }
    return spaces::SimplicialComplex(std::move(vertices), std::move(facets));
}

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

// ---- criteria ----

void matrix_algebra_regression() {
    for (int n = 1; n <= 6; ++n) {
        const json pi_doc = parse_output(
            run_cli_within("pi --builtin point -n " + std::to_string(n) + " --json", 1.0),
            "pi point n=" + std::to_string(n));
        std::vector<int> expected_pi, got_pi;
        for (int j = 1; j <= n; ++j)
            expected_pi.push_back(2 * j - 1);
        for (const auto& block : pi_doc.at("pi")) {
            got_pi.push_back(block.at("total_degree").get<int>());
            require(block.at("dim") == 1, "pi dimension must be 1 in every listed degree");
        }
        require(got_pi == expected_pi,
                "pi degrees for n=" + std::to_string(n) + ": got " + show(got_pi) +
                    ", want " + show(expected_pi));

        const json sigma_doc = parse_output(
            run_cli_within("sigma --builtin point -n " + std::to_string(n) + " --json", 1.0),
            "sigma point n=" + std::to_string(n));
        std::vector<int> expected_hits;
        for (int j = 1; j <= n; ++j)
            expected_hits.push_back(2 * j);
        const auto got_hits = sigma_degrees(sigma_doc);
        require(got_hits == expected_hits,
                "sigma hits for n=" + std::to_string(n) + ": got " + show(got_hits) +
                    ", want " + show(expected_hits));
    }
}

void sphere_three_regression() {
    const double secs = timed_seconds([] {
        const unitary::AlgebraSpec spec(spaces::sphere_space(3), 3);
        const auto pi = unitary::rational_homotopy(spec);

        const std::vector<unitary::BigradedElement> expected{
            {"x_3", -3, 2}, {"1", 0, 1}, {"x_3", -3, 3}, {"1", 0, 2}, {"1", 0, 3}};
        require(pi.elements() == expected, "pi profile over S^3 with n=3 is not the expected "
                                           "five-element basis");
        require(pi.dim(0) == 1 && pi.dim(1) == 1 && pi.dim(2) == 1 && pi.dim(3) == 1 &&
                    pi.dim(5) == 1,
                "pi dimensions over S^3 are off");
        for (const auto& e : pi.elements())
            require(!(e.cohomology_label == "x_3" && e.generator_index == 1),
                    "x_3⊗s_1 must be truncated away");

        const auto split = unitary::based_free_split(spec);
        const std::vector<unitary::BigradedElement> expected_based{{"x_3", -3, 2},
                                                                   {"x_3", -3, 3}};
        const std::vector<unitary::BigradedElement> expected_free{
            {"1", 0, 1}, {"1", 0, 2}, {"1", 0, 3}};
        require(split.based.elements() == expected_based, "based part over S^3 is wrong");
        require(split.free.elements() == expected_free, "free part over S^3 is wrong");

        const auto image = ktheory::sigma_image(pi, ktheory::rational_k_theory(spec));
        require(image.hit_degrees() == std::vector<int>{1, 2, 3, 4, 6},
                "sigma hits over S^3 with n=3: got " + show(image.hit_degrees()));
    });
    require(secs < 1.0, "S^3 regression exceeded 1s");
}

void cp2_collision() {
    const auto pi = unitary::rational_homotopy(unitary::AlgebraSpec(spaces::cp_space(2), 3));
    const auto block = pi.at_degree(1);
    bool c_s3 = false, c2_s5 = false;
    for (const auto& e : block) {
        if (e.cohomology_label == "c" && e.cohomology_degree == -2 && e.generator_degree() == 3)
            c_s3 = true;
        if (e.cohomology_label == "c^2" && e.cohomology_degree == -4 &&
            e.generator_degree() == 5)
            c2_s5 = true;
    }
    require(c_s3, "total degree 1 must contain c⊗s_3 with bidegree (-2,3)");
    require(c2_s5, "total degree 1 must contain c^2⊗s_5 with bidegree (-4,5)");
}

void triangulated_sphere_pipeline() {
    const double secs = timed_seconds([] {
        for (int k = 1; k <= 4; ++k) {
            const auto computed = simplex_boundary(k).cohomology();
            require(computed.same_betti(spaces::sphere_space(k)),
                    "boundary of the " + std::to_string(k + 1) +
                        "-simplex does not match sphere(" + std::to_string(k) + ")");
        }
    });
    require(secs < 5.0, "triangulated-sphere pipeline exceeded 5s");
}

void truncated_tensor_properties() {
    const double secs = timed_seconds([] {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> degree_count(1, 4);
        std::uniform_int_distribution<int> degree(-5, 5);
        std::uniform_int_distribution<int> dim(1, 3);

        auto random_space = [&](const std::string& prefix) {
            graded::GradedSpace out;
            int label = 0;
            const int degrees = degree_count(rng);
            for (int i = 0; i < degrees; ++i) {
                const int d = degree(rng);
                const int n = dim(rng);
                for (int j = 0; j < n; ++j)
                    out.add(d, prefix + std::to_string(label++));
            }
            return out;
        };

        for (int trial = 0; trial < 220; ++trial) {
            const auto v = random_space("v");
            const auto w = random_space("w");
            const auto trunc = graded::truncated_tensor(v, w);
            const auto product = graded::poincare_series(v) * graded::poincare_series(w);
            require(graded::poincare_series(trunc) == product.nonnegative_part(),
                    "P(V ⊗̃ W) must equal the non-negative part of P(V)P(W)");
            for (const auto& [d, labels] : trunc.basis())
                require(d >= 0, "truncated tensor contains a negative degree");
        }
    });
    require(secs < 10.0, "truncated-tensor property suite exceeded 10s");
}

void linear_algebra_properties() {
    const double secs = timed_seconds([] {
        std::mt19937 rng(31337);
        std::uniform_int_distribution<int> dim(1, 8);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int trial = 0; trial < 520; ++trial) {
            const std::size_t rows = dim(rng), cols = dim(rng);
            std::vector<std::vector<int>> entries(rows, std::vector<int>(cols));
            qlinalg::QMatrix m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    entries[i][j] = entry(rng);
                    m.at(i, j) = qlinalg::Rational(entries[i][j]);
                }
            const std::size_t r = m.rank();
            require(r == naive::rank_of_ints(entries),
                    "fraction-free rank disagrees with the row-reduction oracle");
            require(r + m.kernel_basis().size() == cols, "rank-nullity violated");
        }
    });
    require(secs < 10.0, "linear-algebra property suite exceeded 10s");
}

void dimension_formula_oracle() {
    std::mt19937 rng(8128);
    std::uniform_int_distribution<int> degree(0, 7);
    std::uniform_int_distribution<int> extra(0, 4);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::map<int, std::vector<std::string>> entries;
        entries[0].push_back("u");
        const int extras = extra(rng);
        for (int i = 0; i < extras; ++i) {
            const int d = degree(rng);
            auto& labels = entries[d];
            for (int j = 0, n = dim(rng); j < n; ++j)
                labels.push_back("a" + std::to_string(d) + "_" + std::to_string(labels.size()));
        }
        const spaces::CohomologyProfile space("random", std::move(entries));
        const int n = 1 + trial % 5;
        const auto pi = unitary::rational_homotopy(unitary::AlgebraSpec(space, n));

        for (int d = 0; d <= 2 * n + 2; ++d) {
            long long expected = 0;
            for (int j = 1; j <= n; ++j) {
                const int k = 2 * j - 1 - d;
                if (k >= 0)
                    expected += space.betti(k);
            }
            require(pi.dim(d) == expected, "per-degree dimension disagrees with exhaustive "
                                           "pair enumeration");
        }
    }
}

void nonzero_dd_branch() {
    const json doc = parse_output(cli_runner::run("sigma --builtin sphere 3 --dd nonzero --json"),
                                  "sigma sphere(3) dd=nonzero");
    require(!doc.at("sigma").empty(), "sigma table should list hit degrees");
    for (const auto& hit : doc.at("sigma"))
        require(hit.at("target_dim") == 0, "every sigma target must vanish with dd nonzero");

    const json doc2 = parse_output(
        cli_runner::run("sigma --builtin sphere 3 -n 2 --dd nonzero --json"),
        "sigma sphere(3) n=2 dd=nonzero");
    for (const auto& hit : doc2.at("sigma"))
        require(hit.at("target_dim") == 0, "every sigma target must vanish with dd nonzero");

    for (const std::string space : {"point", "cp 2", "\"product(sphere(1),sphere(1))\"",
                                    "sphere 2"}) {
        const auto r = cli_runner::run("sigma --builtin " + space + " -n 2 --dd nonzero");
        require(r.exit_code == 4, "sigma --dd nonzero over " + space + " must exit 4, got " +
                                      std::to_string(r.exit_code));
    }
}

void endomorphism_functoriality() {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);

    auto random_endo = [&](const spaces::CohomologyProfile& space) {
        spaces::CohomologyEndomorphism out;
        for (const auto& [degree, labels] : space.entries()) {
            qlinalg::QMatrix block(labels.size(), labels.size());
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    block.at(i, j) = qlinalg::Rational(num(rng), den(rng));
            out.blocks.emplace(degree, std::move(block));
        }
        return spaces::validate_endomorphism(space, out);
    };

    const std::vector<spaces::CohomologyProfile> corpus{spaces::sphere_space(3),
                                                        spaces::cp_space(2)};
    for (int trial = 0; trial < 110; ++trial) {
        const auto& space = corpus[trial % corpus.size()];
        const unitary::AlgebraSpec spec(space, 2 + trial % 3);
        const auto f = random_endo(space);
        const auto g = random_endo(space);

        const auto composed = ktheory::induced_endomorphism(spaces::compose(f, g), spec);
        const auto fi = ktheory::induced_endomorphism(f, spec);
        const auto gi = ktheory::induced_endomorphism(g, spec);
        require(composed.size() == fi.size(), "induced blocks cover different degrees");
        for (const auto& [d, m] : composed)
            require(m == fi.at(d) * gi.at(d), "induced_endomorphism(f∘g) != induced(f)·induced(g)");

        const auto id =
            ktheory::induced_endomorphism(spaces::identity_endomorphism(space), spec);
        for (const auto& [d, m] : id)
            require(m == qlinalg::QMatrix::identity(m.rows()),
                    "induced_endomorphism(identity) must be the identity");
    }
}

} // namespace

int main() {
    Harness h;
    h.criterion(1, "matrix-algebra regression (point, n=1..6, pi and sigma via CLI)",
                matrix_algebra_regression);
    h.criterion(2, "S^3 regression (five classes, split, sigma hits {1,2,3,4,6})",
                sphere_three_regression);
    h.criterion(3, "CP^2 collision (c⊗s_3 and c^2⊗s_5 share total degree 1)", cp2_collision);
    h.criterion(4, "triangulated-sphere pipeline (boundary of (k+1)-simplex, k=1..4)",
                triangulated_sphere_pipeline);
    h.criterion(5, "property suite: truncated tensor vs Poincare series (220 pairs)",
                truncated_tensor_properties);
    h.criterion(6, "property suite: fraction-free rank vs naive oracle (520 matrices)",
                linear_algebra_properties);
    h.criterion(7, "dimension formula vs exhaustive pair enumeration (60 profiles)",
                dimension_formula_oracle);
    h.criterion(8, "nonzero dd class: vanishing targets over S^3, exit 4 elsewhere",
                nonzero_dd_branch);
    h.criterion(9, "induced endomorphism functoriality (110 pairs over sphere(3), cp(2))",
                endomorphism_functoriality);

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", h.failures);
    return 1;
}
