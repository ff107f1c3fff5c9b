#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "muwm/bounds.hpp"
#include "muwm/construct.hpp"
#include "muwm/corpus.hpp"
#include "muwm/error.hpp"
#include "muwm/matesearch.hpp"
#include "muwm/report.hpp"
#include "muwm/simd.hpp"
#include "muwm/spherical.hpp"

using namespace muwm;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;
constexpr int kRuntimeError = 3;

void add_family_checks(Report& r, const std::string& subject, const FamilyReport& fr,
                       const std::vector<std::string>& names) {
    for (const auto& m : fr.matrices)
        r.add("weighing", subject + ":" + names[m.index], m.pass, {{"detail", m.detail}});
    for (const auto& p : fr.pairs)
        r.add("unbiased", subject + ":" + names[p.first] + "|" + names[p.second], p.pass, {{"detail", p.detail}});
}

std::vector<std::string> matrix_rows(const IntMatrix& m) {
    std::vector<std::string> rows;
    std::istringstream in(serialize_matrix(m));
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    return rows;
}

WeighingMatrix base_from_spec(const std::string& spec, int weight_hint) {
    if (spec == "example") return example_w43();
    if (spec.rfind("paley:", 0) == 0) return paley_weighing(std::stoi(spec.substr(6)));
    const auto m = read_matrix_file(spec);
    if (weight_hint > 0) return WeighingMatrix::make(m, weight_hint);
    // Weight from the first row.
    int k = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) k += m(0, j) != 0;
    return WeighingMatrix::make(m, k);
}

std::vector<std::pair<std::string, IntMatrix>> load_dir_or_family(const std::string& where) {
    std::vector<std::pair<std::string, IntMatrix>> out;
    if (fs::is_directory(where)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(where))
            if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.emplace_back(f.filename().string(), read_matrix_file(f));
    } else {
        const auto fam = load_family(where);
        for (std::size_t i = 0; i < fam.members.size(); ++i) out.emplace_back(fam.entry.members[i].label, fam.members[i]);
    }
    if (out.empty()) throw Error("no matrices found in " + where);
    return out;
}

Report corpus_verify() {
    Report r;
    for (const auto& f : load_corpus()) {
        std::vector<std::string> names;
        for (const auto& m : f.entry.members) names.push_back(m.label);
        add_family_checks(r, f.entry.id, verify_family(f.members, f.entry.weight), names);
        r.add("family-size", f.entry.id, f.members.size() == f.entry.expected_size,
              {{"members", f.members.size()}, {"expected", f.entry.expected_size}, {"order", f.entry.order}});
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mutually unbiased weighing matrices: construction, verification, search and bounds"};
    app.require_subcommand(1);
    std::string simd_backend;
    app.add_option("--simd", simd_backend, "Kernel backend: scalar, avx2 or auto");

    // verify
    auto* verify = app.add_subcommand("verify", "Check weighing axioms and pairwise unbiasedness");
    std::vector<std::string> verify_files;
    int verify_weight = 9;
    verify->add_option("files", verify_files, "Matrix files")->required()->check(CLI::ExistingFile);
    verify->add_option("--weight,-k", verify_weight, "Weight k")->default_val(9);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a family from a base matrix and prime-power Latin squares");
    std::string base_spec = "example";
    int q = 0, base_weight = 0;
    bool with_companion = false;
    std::string out_dir;
    construct->add_option("--base", base_spec, "Matrix file, paley:<p> or example")->default_val("example");
    construct->add_option("--base-weight", base_weight, "Weight of a base read from a file (default: row 1 weight)");
    construct->add_option("--q", q, "Latin square side (prime power)")->required();
    construct->add_flag("--companion", with_companion, "Append the companion matrix (needs q = base order)");
    construct->add_option("--out", out_dir, "Write members as matrix files into this directory");

    // mates
    auto* mates = app.add_subcommand("mates", "Search for unbiased mates of a weight-9 matrix");
    std::string mates_file;
    bool mates_clique = false;
    double budget = 0;
    std::size_t mate_limit = 0;
    mates->add_option("file", mates_file, "Base matrix file")->required()->check(CLI::ExistingFile);
    mates->add_option("--weight,-k", verify_weight, "Weight k")->default_val(9);
    mates->add_flag("--max-clique", mates_clique, "Also compute the family lower bound");
    mates->add_option("--budget", budget, "Time budget in seconds (0: none)");
    mates->add_option("--limit", mate_limit, "Stop after this many mates (0: all)");

    // lp-bound
    auto* lpb = app.add_subcommand("lp-bound", "Upper bounds on the family size");
    int n = 0, k = 9, p = 5;
    bool delsarte = false;
    lpb->add_option("--n", n, "Order")->required();
    lpb->add_option("--k", k, "Weight")->default_val(9);
    lpb->add_flag("--delsarte", delsarte, "Solve the exact Delsarte LP instead of the closed form");
    lpb->add_option("--p", p, "Number of Gegenbauer constraints")->default_val(5);

    // sdp-export
    auto* sdp = app.add_subcommand("sdp-export", "Write the three-distance SDP in SDPA sparse format");
    int sdp_n = 0, p_lp = 5, p_sdp = 5;
    std::string sdp_out, distances = "1/3,-1/3,0";
    sdp->add_option("--n", sdp_n, "Dimension")->required();
    sdp->add_option("--p-lp", p_lp, "LP constraints")->default_val(5);
    sdp->add_option("--p-sdp", p_sdp, "SDP level")->default_val(5);
    sdp->add_option("--d", distances, "Comma-separated inner products")->default_val("1/3,-1/3,0");
    sdp->add_option("--out", sdp_out, "Output path; metadata goes to <out>.json")->required();

    // geometry
    auto* geom = app.add_subcommand("geometry", "Vector system, orthogonality graph and association schemes");
    std::string geom_src;
    bool geom_srg = false;
    int scheme = 0;
    geom->add_option("family", geom_src, "Directory of matrix files or a corpus family id")->required();
    geom->add_flag("--srg", geom_srg, "Check the orthogonality graph for strong regularity");
    geom->add_option("--scheme", scheme, "Check the 4- or 5-class scheme of the doubled system")
        ->check(CLI::IsMember({4, 5}));

    // table1
    auto* table = app.add_subcommand("table1", "Regenerate the upper-bound table for weight 9");
    std::string column = "lp";
    table->add_option("--column", column, "Column to regenerate")->check(CLI::IsMember({"lp"}))->default_val("lp");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Bundled corpus operations");
    auto* corpus_verify_cmd = corpus->add_subcommand("verify", "Full regression over the bundled families");
    corpus->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (!simd_backend.empty()) {
            if (simd_backend == "scalar")
                simd::set_backend(simd::Backend::Scalar);
            else if (simd_backend == "avx2")
                simd::set_backend(simd::Backend::Avx2);
            else if (simd_backend != "auto")
                throw std::invalid_argument("unknown --simd value " + simd_backend);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }

    Report report;
    try {
        if (*verify) {
            std::vector<IntMatrix> ms;
            for (const auto& f : verify_files) ms.push_back(read_matrix_file(f));
            add_family_checks(report, "input", verify_family(ms, verify_weight), verify_files);
        } else if (*construct) {
            const auto base = base_from_spec(base_spec, base_weight);
            const auto squares = msls_family(q);
            const auto fam = with_companion ? muwm_from_msls_with_companion(base, squares) : muwm_from_msls(base, squares);
            std::vector<IntMatrix> ms;
            for (const auto& m : fam.members) ms.push_back(m.matrix());
            add_family_checks(report, "construct", verify_family(ms, fam.weight), fam.labels);
            report.add("family", "construct", true,
                       {{"order", fam.order}, {"weight", fam.weight}, {"size", fam.size()}, {"base", base_spec}, {"q", q}});
            if (!out_dir.empty()) {
                fs::create_directories(out_dir);
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    std::ofstream out(fs::path(out_dir) / (fam.labels[i] + ".txt"), std::ios::binary);
                    out << serialize_matrix(ms[i]);
                    if (!out) throw Error("failed to write into " + out_dir);
                }
            }
        } else if (*mates) {
            const auto w = WeighingMatrix::make(read_matrix_file(mates_file), verify_weight);
            Budget b;
            if (budget > 0) b = std::chrono::duration<double>(budget);
            std::optional<std::size_t> lim;
            if (mate_limit > 0) lim = mate_limit;
            if (mates_clique) {
                const auto lb = muwm_lower_bound(w, b, lim);
                json members = json::array();
                for (const auto& m : lb.family.members) members.push_back(matrix_rows(m.matrix()));
                report.add("lower-bound", mates_file, verify_family(lb.family).valid(),
                           {{"size", lb.size},
                            {"exact", lb.exact},
                            {"mates", lb.mate_count},
                            {"mate_graph_edges", lb.mate_graph_edges},
                            {"witness", lb.family.labels},
                            {"family", members}});
            } else {
                const auto s = find_mates(w, lim, b);
                json sets = json::array();
                for (const auto& m : s.mates) sets.push_back(m.vertex_set);
                report.add("mates", mates_file, true,
                           {{"gamma_vertices", s.gamma.vertices.rows()},
                            {"gamma_edges", s.gamma.graph.edge_count()},
                            {"dual_dimension", s.gamma.dual_dimension},
                            {"mates", s.mates.size()},
                            {"complete", s.complete},
                            {"vertex_sets", sets}});
            }
        } else if (*lpb) {
            const std::string subject = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            if (delsarte) {
                if (k != 9) throw Error("the Delsarte LP here uses the weight-9 distances");
                try {
                    const auto r = lp_bound_delsarte(n, DistanceSet::muwm9(), p);
                    report.add("lp-bound-delsarte", subject, true,
                               {{"family_bound", r.family_bound.get_d()},
                                {"family_bound_exact", to_string(r.family_bound)},
                                {"set_bound_exact", to_string(r.set_bound)},
                                {"floor", muwm::floor(r.family_bound).get_si()}});
                } catch (const Unbounded& e) {
                    report.add("lp-bound-delsarte", subject, false, {{"error", e.what()}});
                }
            } else {
                report.add("lp-bound", subject, true, {{"bound", lp_bound_closed(n, k)}});
            }
        } else if (*sdp) {
            std::vector<Rational> ds;
            std::stringstream ss(distances);
            for (std::string part; std::getline(ss, part, ',');) ds.push_back(parse_rational(part));
            const auto prob = sdp_assemble(sdp_n, DistanceSet::make(ds), p_lp, p_sdp);
            sdp_export(prob, sdp_out);
            report.add("sdp-export", sdp_out, true,
                       {{"blocks", prob.blocks.size()}, {"variables", SdpProblem::kVariables}, {"metadata", sdp_out + ".json"}});
        } else if (*geom) {
            const auto loaded = load_dir_or_family(geom_src);
            std::vector<IntMatrix> ms;
            std::vector<std::string> names;
            for (const auto& [name, m] : loaded) {
                names.push_back(name);
                ms.push_back(m);
            }
            int weight = 0;
            for (std::size_t j = 0; j < ms[0].cols(); ++j) weight += ms[0](0, j) != 0;
            const auto fr = verify_family(ms, weight);
            add_family_checks(report, geom_src, fr, names);
            if (fr.valid()) {
                const auto fam = make_family(ms, weight, names);
                const auto vs = vector_system(fam);
                report.add("vector-system", geom_src, true,
                           {{"vectors", vs.size()}, {"dimension", vs.dimension}, {"spectrum", inner_product_spectrum(vs)}});
                if (geom_srg) {
                    const auto r = orthogonality_srg(vs);
                    json d = r.params ? json{{"v", r.params->v}, {"k", r.params->k}, {"lambda", r.params->lambda}, {"mu", r.params->mu}}
                                      : json{{"diagnostic", r.diagnostic}};
                    report.add("srg", geom_src, r.params.has_value(), d);
                }
                if (scheme != 0) {
                    const auto d = antipodal_double(vs);
                    const auto rp = relation_partition(d, scheme == 4 ? SchemeMode::FourClass : SchemeMode::FiveClass);
                    const auto s = is_association_scheme(rp);
                    json details = {{"points", rp.points}, {"classes", rp.classes}};
                    if (s.is_scheme)
                        details["intersection_numbers"] = s.p;
                    else
                        details["diagnostic"] = s.diagnostic;
                    report.add("association-scheme-" + std::to_string(scheme), geom_src, s.is_scheme, details);
                }
            }
        } else if (*table) {
            for (int nn = 10; nn <= 30; ++nn) {
                const long closed = lp_bound_closed(nn, 9);
                json details = {{"n", nn}, {"ub_lp", closed}};
                bool pass = true;
                try {
                    const auto r = lp_bound_delsarte(nn, DistanceSet::muwm9(), 5);
                    details["delsarte"] = r.family_bound.get_d();
                    if (nn <= 23) pass = muwm::floor(r.family_bound).get_si() == closed;
                } catch (const Unbounded&) {
                    details["delsarte"] = nullptr;
                    pass = nn > 23;
                }
                report.add("table1-lp", "n=" + std::to_string(nn), pass, details);
            }
        } else if (*corpus && *corpus_verify_cmd) {
            report = corpus_verify();
        }
    } catch (const std::exception& e) {
        report.write(std::cout);
        std::cerr << "error: " << e.what() << "\n";
        return kRuntimeError;
    }
    report.write(std::cout);
    return report.exit_code();
}
