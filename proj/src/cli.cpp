#include "qcenter/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qcenter/bwb.hpp"
#include "qcenter/json_io.hpp"

namespace qcenter {

namespace fs = std::filesystem;

std::vector<int> parse_levi(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok) - 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string cache_file_name(char type, int rank, const std::vector<int>& levi) {
    std::string name = "diamond-";
    name += type;
    name += std::to_string(rank) + "-";
    if (levi.empty()) {
        name += "borel";
    } else {
        name += "levi";
        for (int i : levi) name += std::to_string(i + 1);
    }
    return name + ".json";
}

bool atomic_write(const fs::path& path, const std::string& content) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc | std::ios::binary);
        if (!f) return false;
        f << content;
        if (!f.good()) return false;
    }
    fs::rename(tmp, path, ec);
    return !ec;
}

struct DiamondRunner {
    const RunConfig& cfg;
    std::ostream& err;
    bool cache_write_failed = false;

    HodgeDiamond get(char type, int rank, const std::vector<int>& levi) {
        RootSystemData rs = build_root_system(type, rank);
        ChevalleyBasis cb = build_chevalley_basis(rs);
        ParabolicSplit split = parabolic_split(cb, levi);

        fs::path path;
        HodgeDiamond seed;
        bool have_seed = false;
        if (!cfg.cache_dir.empty()) {
            path = fs::path(cfg.cache_dir) / cache_file_name(type, rank, levi);
            std::ifstream f(path, std::ios::binary);
            if (f) {
                std::stringstream buf;
                buf << f.rdbuf();
                try {
                    seed = diamond_from_json(buf.str());
                    if (seed.type_letter == type && seed.rank == rank && seed.levi == levi)
                        have_seed = true;
                    else
                        err << "warning: cache file " << path.string()
                            << " does not match the request; recomputing\n";
                } catch (const std::exception& e) {
                    err << "warning: corrupt cache " << path.string() << " (" << e.what()
                        << "); recomputing\n";
                }
            }
        }
        if (have_seed && seed.complete()) return seed;

        std::function<void(const HodgeDiamond&)> checkpoint;
        if (!path.empty())
            checkpoint = [this, path](const HodgeDiamond& partial) {
                if (!atomic_write(path, diamond_to_json(partial))) cache_write_failed = true;
            };
        HodgeDiamond hd = hodge_diamond(cb, split, have_seed ? &seed : nullptr, cfg.jobs, checkpoint);
        if (!path.empty() && !atomic_write(path, diamond_to_json(hd))) cache_write_failed = true;
        return hd;
    }
};

int64_t parse_int64(const std::string& s) { return std::stoll(s); }

}  // namespace

int run_cli(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "md" && cfg.format != "json" && cfg.format != "csv")
            throw invalid_argument("format must be md, json or csv");

        if (cfg.command == "diamond") {
            DiamondRunner runner{cfg, err};
            HodgeDiamond hd = runner.get(cfg.type_letter, cfg.rank, cfg.levi);
            if (cfg.format == "json")
                out << diamond_to_json(hd);
            else if (cfg.format == "csv")
                out << diamond_to_csv(hd);
            else
                out << diamond_to_markdown(hd, cfg.per_weight);
            if (runner.cache_write_failed) {
                err << "error: failed to write cache under " << cfg.cache_dir << "\n";
                return 3;
            }
            return 0;
        }

        if (cfg.command == "census") {
            RootSystemData rs = build_root_system(cfg.type_letter, cfg.rank);
            BlockCensus census = restricted_weight_census(rs, cfg.l);
            if (cfg.format == "json")
                out << census_to_json(census);
            else if (cfg.format == "csv")
                out << census_to_csv(census);
            else
                out << census_to_markdown(census);
            return 0;
        }

        if (cfg.command == "center-dim") {
            RootSystemData rs = build_root_system(cfg.type_letter, cfg.rank);
            DiamondRunner runner{cfg, err};
            BlockCensus census = total_center_dimension(
                rs, cfg.l, [&](const std::vector<int>& levi) -> Int {
                    return runner.get(cfg.type_letter, cfg.rank, levi).total;
                });
            if (cfg.format == "json")
                out << census_to_json(census);
            else if (cfg.format == "csv")
                out << census_to_csv(census);
            else
                out << census_to_markdown(census);
            if (runner.cache_write_failed) {
                err << "error: failed to write cache under " << cfg.cache_dir << "\n";
                return 3;
            }
            return 0;
        }

        if (cfg.command == "bwb") {
            auto res = bwb_grassmannian(cfg.bwb_n, cfg.bwb_k, Partition(cfg.alpha),
                                        Partition(cfg.beta));
            if (cfg.format == "json") {
                if (!res)
                    out << "{\n  \"vanishes\": true\n}\n";
                else {
                    out << "{\n  \"degree\": " << res->first << ",\n  \"nu\": [";
                    for (size_t t = 0; t < res->second.parts.size(); ++t)
                        out << (t ? "," : "") << res->second.parts[t];
                    out << "]\n}\n";
                }
            } else {
                if (!res)
                    out << "all cohomology vanishes\n";
                else
                    out << "H^" << res->first << " = S_" << res->second.str() << "\n";
            }
            return 0;
        }

        if (cfg.command == "bgg-dump") {
            RootSystemData rs = build_root_system(cfg.type_letter, cfg.rank);
            ChevalleyBasis cb = build_chevalley_basis(rs);
            ParabolicSplit split = parabolic_split(cb, cfg.levi);
            WeightedBModule e = graded_piece(cb, split, cfg.j_degree, cfg.r_degree);
            if (cfg.dump_differentials) {
                if (static_cast<int>(cfg.nu.size()) != cfg.rank)
                    throw invalid_argument("--nu must have one coordinate per simple root");
                out << bgg_to_json(e, WeightVector{cfg.nu});
            } else {
                out << module_to_json(e);
            }
            return 0;
        }

        throw invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const internal_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const cache_error& e) {
        err << "cache error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcenter
