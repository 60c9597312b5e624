#include "bipaths/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "bipaths/dot.hpp"
#include "bipaths/oracle.hpp"

namespace bipaths {

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::LoopRejected:
        case ErrorCode::UnknownVertex:
        case ErrorCode::DuplicateVertex: return exit_code::parse;
        case ErrorCode::InternalDualityMismatch: return exit_code::internal;
        default: return exit_code::usage;
    }
}

std::string format_path(const Instance& inst, const SignedPath& p) {
    std::string s = inst.name(p.front());
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const EdgeId e = p.edges[i];
        s += ' ';
        s += to_char(inst.graph.sign_at(e, p.vertices[i]));
        s += "[e" + std::to_string(e) + "]";
        s += to_char(inst.graph.sign_at(e, p.vertices[i + 1]));
        s += ' ';
        s += inst.name(p.vertices[i + 1]);
    }
    return s;
}

std::string format_set(const Instance& inst, const VertexSet& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ',';
        s += inst.name(set[i]);
    }
    return s + "}";
}

namespace {

bool packing_is_valid(const Instance& inst, const PackingResult& packing) {
    if (packing.paths.size() != packing.k) return false;
    std::vector<std::uint8_t> used(inst.graph.num_vertices(), 0);
    for (const SignedPath& p : packing.paths) {
        if (!is_x_path(inst.graph, inst.x, p)) return false;
        for (VertexId v : p.vertices) {
            if (used[v]) return false;
            used[v] = 1;
        }
    }
    return true;
}

void print_certificate(const Instance& inst, const Certificate& cert, CertificateCheck check,
                       OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Machine) {
        out << "S: " << format_set(inst, cert.s) << '\n';
        out << "T: " << format_set(inst, cert.t) << '\n';
        out << "value: " << cert.value << '\n';
        out << "certificate: " << to_string(check) << '\n';
    } else {
        out << "certificate: S=" << format_set(inst, cert.s) << " T=" << format_set(inst, cert.t)
            << " value=" << cert.value << '\n';
        out << "certificate check: " << to_string(check) << '\n';
    }
}

void print_paths(const Instance& inst, const std::vector<SignedPath>& paths, OutputFormat format,
                 std::ostream& out) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (format == OutputFormat::Machine)
            out << "path: " << format_path(inst, paths[i]) << '\n';
        else
            out << "  " << i + 1 << ". " << format_path(inst, paths[i]) << '\n';
    }
}

std::string verify_one(const std::string& file, const CommandOptions& opts, bool& ok, bool& parse_failed) {
    std::ostringstream os;
    const bool machine = opts.format == OutputFormat::Machine;
    os << (machine ? "file: " : "== ") << file << '\n';

    Instance inst;
    try {
        std::ifstream in(file);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open file");
        inst = read_instance(in);
    } catch (const Error& e) {
        parse_failed = true;
        os << "status: error\nerror: " << e.what() << '\n';
        return os.str();
    }

    try {
        const Solution sol = solve(inst.graph, inst.x);
        const CertificateCheck check = check_certificate(inst.graph, inst.x, sol.certificate, sol.packing.k);
        const bool packing_ok = packing_is_valid(inst, sol.packing);

        std::string oracle_packing = "skipped", oracle_dual = "skipped";
        bool oracle_ok = true;
        try {
            const std::size_t brute = oracle::brute_max_disjoint(inst.graph, inst.x, opts.limit);
            oracle_packing = std::to_string(brute);
            oracle_ok = oracle_ok && brute == sol.packing.k;
        } catch (const LimitExceeded&) {
        }
        try {
            const std::size_t dual = oracle::brute_dual_min(inst.graph, inst.x).value;
            oracle_dual = std::to_string(dual);
            oracle_ok = oracle_ok && dual == sol.packing.k;
        } catch (const LimitExceeded&) {
        }

        ok = check == CertificateCheck::Ok && packing_ok && oracle_ok;
        os << "status: " << (ok ? "ok" : "mismatch") << '\n';
        os << "k: " << sol.packing.k << '\n';
        os << "certificate: " << to_string(check) << '\n';
        os << "packing: " << (packing_ok ? "ok" : "invalid") << '\n';
        os << "oracle_packing: " << oracle_packing << '\n';
        os << "oracle_dual: " << oracle_dual << '\n';
    } catch (const Error& e) {
        ok = false;
        os << "status: error\nerror: " << e.what() << '\n';
    }
    return os.str();
}

}  // namespace

int cmd_solve(const Instance& inst, const CommandOptions& opts, std::ostream& out) {
    const Solution sol = solve(inst.graph, inst.x);
    const CertificateCheck check = check_certificate(inst.graph, inst.x, sol.certificate, sol.packing.k);
    if (opts.format == OutputFormat::Machine) {
        out << "k: " << sol.packing.k << '\n';
    } else {
        out << "maximum number of disjoint X-paths: k=" << sol.packing.k << '\n';
    }
    print_paths(inst, sol.packing.paths, opts.format, out);
    print_certificate(inst, sol.certificate, check, opts.format, out);
    return check == CertificateCheck::Ok ? exit_code::ok : exit_code::internal;
}

int cmd_certify(const Instance& inst, const CommandOptions& opts, std::ostream& out) {
    const Solution sol = solve(inst.graph, inst.x);
    const CertificateCheck check = check_certificate(inst.graph, inst.x, sol.certificate, sol.packing.k);
    out << (opts.format == OutputFormat::Machine ? "k: " : "k=") << sol.packing.k << '\n';
    print_certificate(inst, sol.certificate, check, opts.format, out);
    return check == CertificateCheck::Ok ? exit_code::ok : exit_code::internal;
}

int cmd_hitting_set(const Instance& inst, std::size_t k, const CommandOptions& opts,
                    std::ostream& out) {
    const auto result = hitting_set(inst.graph, inst.x, k);
    const bool machine = opts.format == OutputFormat::Machine;
    if (const auto* packing = std::get_if<PackingResult>(&result)) {
        if (machine)
            out << "k: " << k << "\noutcome: packing\n";
        else
            out << k << " disjoint X-paths exist:\n";
        print_paths(inst, packing->paths, opts.format, out);
        return exit_code::ok;
    }
    const auto& hs = std::get<HittingSet>(result);
    const bool clean = !has_x_path(delete_vertices(inst.graph, hs.y), inst.x);
    if (machine) {
        out << "k: " << k << "\noutcome: hitting-set\n";
        out << "Y: " << format_set(inst, hs.y) << '\n';
        out << "size: " << hs.y.size() << '\n';
        out << "bound: " << 2 * k - 2 << '\n';
        out << "audit: " << (clean ? "pass" : "fail") << '\n';
    } else {
        out << "fewer than " << k << " disjoint X-paths; hitting set Y=" << format_set(inst, hs.y)
            << " (|Y|=" << hs.y.size() << ", bound 2k-2=" << 2 * k - 2 << ")\n";
        out << "audit: " << (clean ? "no X-path in B-Y" : "X-path survives in B-Y") << '\n';
    }
    return clean ? exit_code::ok : exit_code::internal;
}

int cmd_verify(const std::vector<std::string>& files, const CommandOptions& opts, std::ostream& out) {
    std::vector<std::string> reports(files.size());
    std::vector<std::uint8_t> ok(files.size(), 0), parse_failed(files.size(), 0);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
            bool good = false, bad_parse = false;
            reports[i] = verify_one(files[i], opts, good, bad_parse);
            ok[i] = good;
            parse_failed[i] = bad_parse;
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(files.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& r : reports) out << r;
    if (std::any_of(parse_failed.begin(), parse_failed.end(), [](auto f) { return f != 0; }))
        return exit_code::parse;
    for (std::size_t i = 0; i < files.size(); ++i)
        if (!ok[i]) return exit_code::internal;
    return exit_code::ok;
}

std::string cmd_convert(std::string_view text, ConvertMode mode) {
    return to_bgf(convert(parse_edge_list(text), mode));
}

std::string cmd_generate(const GeneratorParams& params) { return to_bgf(generate_instance(params)); }

std::string cmd_export_dot(const Instance& inst, Overlay overlay, std::size_t k) {
    DotOverlay o;
    switch (overlay) {
        case Overlay::None: break;
        case Overlay::Paths: o.packing = max_disjoint_x_paths(inst.graph, inst.x); break;
        case Overlay::Certificate: o.certificate = certificate(inst.graph, inst.x); break;
        case Overlay::HittingSet: {
            auto result = hitting_set(inst.graph, inst.x, k);
            if (auto* hs = std::get_if<HittingSet>(&result))
                o.hitting_set = hs->y;
            else
                o.packing = std::get<PackingResult>(result);
            break;
        }
    }
    return to_dot(inst, o);
}

}  // namespace bipaths
