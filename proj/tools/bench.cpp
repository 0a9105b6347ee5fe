// Times each partitionable kernel serially and with the requested worker
// count, and checks the two runs produce identical results. The parallel
// paths share all result-merging code with the serial ones, so "equal no"
// here means a real determinism bug.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "grace/graceful.hpp"
#include "grace/lattice.hpp"
#include "grace/monomial.hpp"
#include "grace/stock.hpp"

namespace {

template <typename Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& task, double serial, double parallel, bool equal) {
    std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", task.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, equal ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial versus parallel kernel timings"};
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 2) jobs = 2;
    app.add_option("--jobs", jobs, "parallel worker count")->check(CLI::Range(2, 256));
    CLI11_PARSE(app, argc, argv);

    const std::string par = "jobs=" + std::to_string(jobs);
    std::printf("%-28s %10s %10s %8s  %s\n", "task", "serial", par.c_str(), "speedup", "equal");

    for (int n : {7, 8}) {
        grace::MonomialClassification a, b;
        grace::MonomialOptions serial, parallel;
        parallel.jobs = jobs;
        const grace::Graph g = grace::Graph::complete(n);
        const double ts = timed([&] { a = grace::classify_monomials(g, serial); });
        const double tp = timed([&] { b = grace::classify_monomials(g, parallel); });
        const bool equal = a.raw_count == b.raw_count && a.degenerate_count == b.degenerate_count &&
                           a.spanning_trees == b.spanning_trees &&
                           a.cyclic_subgraphs == b.cyclic_subgraphs;
        row("monomials K" + std::to_string(n), ts, tp, equal);
    }

    for (int n : {9, 10}) {
        grace::GracefulCatalog a, b;
        grace::GracefulOptions serial, parallel;
        parallel.jobs = jobs;
        const double ts = timed([&] { a = grace::build_graceful_catalog(n, serial); });
        const double tp = timed([&] { b = grace::build_graceful_catalog(n, parallel); });
        const bool equal = a.raw_selections == b.raw_selections &&
                           a.choice_vectors == b.choice_vectors && a.trees == b.trees &&
                           a.non_trees == b.non_trees;
        row("graceful catalog n=" + std::to_string(n), ts, tp, equal);
    }

    for (int n : {10, 11}) {
        std::uint64_t a = 0, b = 0;
        grace::LatticeOptions serial, parallel;
        parallel.jobs = jobs;
        const double ts = timed([&] { a = grace::count_lattice_paths(n, true, serial); });
        const double tp = timed([&] { b = grace::count_lattice_paths(n, true, parallel); });
        row("tree paths n=" + std::to_string(n), ts, tp, a == b);
    }

    {
        const int n = 13;
        grace::Stock a, b;
        grace::StockOptions serial, parallel;
        parallel.jobs = jobs;
        const double ts = timed([&] { a = grace::build_stock(n, serial); });
        const double tp = timed([&] { b = grace::build_stock(n, parallel); });
        bool equal = a.size() == b.size();
        for (auto ia = a.members.begin(), ib = b.members.begin();
             equal && ia != a.members.end(); ++ia, ++ib)
            equal = ia->first == ib->first && ia->second.edges == ib->second.edges;
        row("stock n=" + std::to_string(n), ts, tp, equal);
    }

    return 0;
}
