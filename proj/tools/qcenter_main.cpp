#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "qcenter/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "qcenter: exact bigraded dimensions of small-quantum-group block centers,\n"
        "computed as cohomology of polyvector fields on cotangent bundles of flag varieties"};
    app.require_subcommand(1);

    qcenter::RunConfig cfg;
    std::string type = "A";
    std::string levi_text;
    std::string alpha_text, beta_text, nu_text;
    if (const char* env = std::getenv("QCENTER_CACHE")) cfg.cache_dir = env;

    auto add_common = [&](CLI::App* sub, bool with_levi) {
        sub->add_option("--type", type, "root system type letter (A, B, C, D)");
        sub->add_option("--rank", cfg.rank, "rank of the root system")->required();
        if (with_levi)
            sub->add_option("--levi", levi_text,
                            "comma-separated 1-based simple roots of the Levi; empty for the Borel");
        sub->add_option("--format", cfg.format, "output format: md, json or csv");
        sub->add_option("--cache-dir", cfg.cache_dir,
                        "result cache directory (default: $QCENTER_CACHE)");
        sub->add_option("--jobs", cfg.jobs, "worker threads for independent table entries");
    };

    auto* diamond = app.add_subcommand("diamond", "bigraded dimension table of one block center");
    add_common(diamond, true);
    diamond->add_flag("--per-weight", cfg.per_weight, "print isotype decompositions per entry");

    auto* census = app.add_subcommand("census", "orbit census of the restricted weights");
    add_common(census, false);
    census->add_option("--l", cfg.l, "root-of-unity order")->required();

    auto* center = app.add_subcommand("center-dim", "total center dimension across all blocks");
    add_common(center, false);
    center->add_option("--l", cfg.l, "root-of-unity order")->required();

    auto* bwb = app.add_subcommand("bwb", "Schur-bundle cohomology on a Grassmannian");
    bwb->add_option("--N", cfg.bwb_n, "ambient dimension")->required();
    bwb->add_option("--k", cfg.bwb_k, "subspace dimension")->required();
    bwb->add_option("--alpha", alpha_text, "quotient-side partition, comma-separated")->required();
    bwb->add_option("--beta", beta_text, "tautological-side partition, comma-separated")->required();
    bwb->add_option("--format", cfg.format, "output format: md or json");

    auto* dump = app.add_subcommand("bgg-dump", "debug dump of a module or its complex");
    add_common(dump, true);
    dump->add_option("--j", cfg.j_degree, "exterior degree")->required();
    dump->add_option("--r", cfg.r_degree, "internal degree (even, <= 0)")->required();
    dump->add_option("--nu", nu_text, "dominant weight, comma-separated fundamental coordinates");
    dump->add_flag("--dump-differentials", cfg.dump_differentials,
                   "emit edge operators and differential matrices for --nu");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.type_letter = type.empty() ? 'A' : type[0];
    try {
        cfg.levi = qcenter::parse_levi(levi_text);
        auto parse_list = [](const std::string& text) {
            std::vector<int64_t> out;
            std::stringstream ss(text);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) out.push_back(std::stoll(tok));
            return out;
        };
        cfg.alpha = parse_list(alpha_text);
        cfg.beta = parse_list(beta_text);
        cfg.nu = parse_list(nu_text);
    } catch (const std::exception& e) {
        std::cerr << "error: bad numeric list: " << e.what() << "\n";
        return 1;
    }
    return qcenter::run_cli(cfg, std::cout, std::cerr);
}
