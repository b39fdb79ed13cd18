/**
 * maclab: command-line front end for partition decompositions, V-codings,
 * hook statistics and identity verification.
 *
 * Exit codes: 0 success / identity verified, 1 coefficient mismatch,
 * 2 usage or parameter error. Every report carries "schema": "1"; output
 * is deterministic and does not depend on the worker count.
 */
#include "maclab/characters.hpp"
#include "maclab/errors.hpp"
#include "maclab/hookprods.hpp"
#include "maclab/identities.hpp"
#include "maclab/littlewood.hpp"
#include "maclab/partitions.hpp"
#include "maclab/vcoding.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace maclab;

namespace {

constexpr const char* kSchema = "1";

enum class Format { Json, Tsv, Pretty };

/** "4,4,3,2" -> Partition; the empty string is the empty partition. */
Partition parse_parts(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidParts, "'" + item + "' is not an integer");
        }
        if (used != item.size()) throw Error(ErrorKind::InvalidParts, "'" + item + "' is not an integer");
        parts.push_back(v);
    }
    return Partition(parts);
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0 || text.empty()) {
        throw Error(ErrorKind::ParameterOutOfRange, "'" + text + "' is not a rational number");
    }
    r.canonicalize();
    if (r.get_den() == 0) throw Error(ErrorKind::ZeroDenominator, "'" + text + "'");
    return r;
}

json parts_json(const Partition& p) { return json(p.parts()); }

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

template <class T>
std::string list_str(const std::vector<T>& v)
{
    std::vector<std::string> items;
    for (const auto& x : v) {
        std::ostringstream s;
        s << x;
        items.push_back(s.str());
    }
    return "[" + join(items, ",") + "]";
}

/** Prints a flat key/value record in the requested format. */
void emit_record(const json& j, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::Json: out << j.dump(2) << "\n"; break;
    case Format::Tsv: {
        std::vector<std::string> keys, values;
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys.push_back(it.key());
            values.push_back(it->is_string() ? it->get<std::string>() : it->dump());
        }
        out << join(keys, "\t") << "\n" << join(values, "\t") << "\n";
        break;
    }
    case Format::Pretty:
        for (auto it = j.begin(); it != j.end(); ++it) {
            out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        }
        break;
    }
}

const char* x_mode_name(XMode m) { return m == XMode::Symbolic ? "symbolic" : "specialized"; }
const char* u_mode_name(UMode m) { return m == UMode::Symbolic ? "symbolic" : "samples"; }
const char* z_mode_name(ZMode m) { return m == ZMode::Poly ? "poly" : "samples"; }
const char* form_name(Form f) { return f == Form::Printed ? "printed" : "corrected"; }

/** The verification report; timing and worker count are left out to keep output reproducible. */
json report_json(const VerifyReport& r)
{
    const auto& info = identity_info(r.id);
    json params = {
        {"t", r.params.t},
        {"order", r.params.order},
        {"form", form_name(r.params.form)},
        {"mutate", r.params.mutate},
    };
    switch (info.kind) {
    case IdentityKind::Macdonald: params["x_mode"] = x_mode_name(r.params.x_mode); break;
    case IdentityKind::QNO: params["u_mode"] = u_mode_name(r.params.u_mode); [[fallthrough]];
    case IdentityKind::QTNO: params["degree_cap"] = r.params.degree_cap; break;
    case IdentityKind::NO: params["z_mode"] = z_mode_name(r.params.z_mode); break;
    }
    if (!r.params.samples.empty()) {
        std::vector<std::string> s;
        for (const auto& x : r.params.samples) s.push_back(rational_str(x));
        params["samples"] = s;
    }
    json j = {
        {"schema", kSchema},
        {"command", "verify"},
        {"id", identity_name(r.id)},
        {"params", params},
        {"mode", r.mode},
        {"ring", r.ring},
        {"coefficients_checked", r.checks.size()},
        {"pass", r.pass},
    };
    if (r.first_mismatch) {
        const auto& m = *r.first_mismatch;
        j["first_mismatch"] = {{"sample", m.sample}, {"base", m.base}, {"power", m.power}, {"lhs", m.lhs}, {"rhs", m.rhs}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

void emit_report(const VerifyReport& r, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::Json: out << report_json(r).dump(2) << "\n"; break;
    case Format::Tsv: {
        out << "id\tpass\tcoefficients_checked\tmode\tfirst_mismatch\n";
        std::string where = "-";
        if (r.first_mismatch) {
            const auto& m = *r.first_mismatch;
            where = (m.sample.empty() ? "" : m.sample + " ") + m.base + "^" + std::to_string(m.power);
        }
        out << identity_name(r.id) << "\t" << (r.pass ? "true" : "false") << "\t" << r.checks.size() << "\t" << r.mode << "\t" << where << "\n";
        break;
    }
    case Format::Pretty:
        out << identity_name(r.id) << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.mode << "; " << r.checks.size() << " coefficients over " << r.ring << ")\n";
        if (r.first_mismatch) {
            const auto& m = *r.first_mismatch;
            out << "  first mismatch at " << (m.sample.empty() ? "" : m.sample + ", ") << m.base << "^" << m.power << "\n";
            out << "    sum side:     " << m.lhs << "\n";
            out << "    product side: " << m.rhs << "\n";
        }
        break;
    }
}

struct Options {
    std::string format = "json";
    int workers = 0;

    std::string parts;
    int t = 0;
    int g = 0;
    std::string family;
    std::string type;
    int max_weight = 10;

    std::string id;
    int order = 0;
    std::string x_mode = "specialized";
    std::string u_mode = "symbolic";
    std::string z_mode = "poly";
    std::string form = "printed";
    std::vector<std::string> samples;
    int cap = -1;
    bool mutate = false;
    std::string report;
};

Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    return Format::Pretty;
}

int cmd_decompose(const Options& o, Format fmt)
{
    Partition p = parse_parts(o.parts);
    Decomposition d = decompose(p, o.t);
    json quotient = json::array();
    for (const auto& q : d.quotient) quotient.push_back(parts_json(q));
    json j = {{"schema", kSchema}, {"command", "decompose"}, {"parts", parts_json(p)}, {"t", o.t},
              {"core", parts_json(d.core)}, {"quotient", quotient}, {"charges", d.charges}};
    emit_record(j, fmt, std::cout);
    return 0;
}

int cmd_vcoding(const Options& o, Format fmt)
{
    Partition p = parse_parts(o.parts);
    VCoding vc;
    json j = {{"schema", kSchema}, {"command", "vcoding"}, {"parts", parts_json(p)}};
    if (!o.type.empty()) {
        FamilyTag tag = tag_for(parse_root_type(o.type), o.t);
        vc = vcoding(p, tag);
        j["type"] = o.type;
        j["character_index"] = parts_json(character_index(vc, parse_root_type(o.type)));
    } else {
        vc = vcoding(p, o.g, o.t);
    }
    std::vector<int> sigma;
    for (int s : vc.sigma) sigma.push_back(s);
    j["g"] = vc.g;
    j["t"] = vc.t;
    j["v"] = vc.v;
    j["sigma"] = sigma;
    j["parity"] = vc.parity;
    emit_record(j, fmt, std::cout);
    return 0;
}

int cmd_hooks(const Options& o, Format fmt)
{
    Partition p = parse_parts(o.parts);
    std::vector<int> all = hook_multiset(p);
    std::sort(all.begin(), all.end());
    std::vector<int> diag = diagonal_hooks(p);
    std::sort(diag.begin(), diag.end());
    json j = {{"schema", kSchema}, {"command", "hooks"}, {"parts", parts_json(p)}, {"H", all}, {"diagonal", diag},
              {"durfee", p.durfee()}};
    if (o.t > 0) {
        std::vector<int> mod = hooks_mod(p, o.t);
        std::sort(mod.begin(), mod.end());
        j["t"] = o.t;
        j["H_t"] = mod;
    }
    emit_record(j, fmt, std::cout);
    return 0;
}

/** Bulk listing of a family (or of a type's cores) as TSV or JSON lines. */
int cmd_scan(const Options& o, Format fmt)
{
    FamilyTag tag;
    std::optional<RootType> type;
    if (!o.type.empty()) {
        type = parse_root_type(o.type);
        tag = tag_for(*type, o.t);
    } else {
        tag = FamilyTag{o.family.empty() ? Family::P : parse_family(o.family), o.g, o.t};
    }
    if (o.max_weight < 0) throw Error(ErrorKind::ParameterOutOfRange, "max-weight must be >= 0");
    std::vector<Partition> members = enumerate(tag, o.max_weight);
    bool coded = tag.g > 0 && tag.t > 0;
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& p : members) {
            json row = {{"weight", p.weight()}, {"parts", parts_json(p)}, {"durfee", p.durfee()}};
            if (coded) {
                VCoding vc = vcoding(p, tag);
                row["v"] = vc.v;
                if (type) row["character_index"] = parts_json(character_index(vc, *type));
            }
            rows.push_back(row);
        }
        json j = {{"schema", kSchema}, {"command", "scan"}, {"family", tag.str()}, {"max_weight", o.max_weight},
                  {"count", members.size()}, {"members", rows}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "# schema=" << kSchema << " family=" << tag.str() << " max_weight=" << o.max_weight << "\n";
    std::cout << "weight\tparts\tdurfee" << (coded ? "\tv" : "") << (coded && type ? "\tcharacter_index" : "") << "\n";
    for (const auto& p : members) {
        std::cout << p.weight() << "\t" << list_str(p.parts()) << "\t" << p.durfee();
        if (coded) {
            VCoding vc = vcoding(p, tag);
            std::cout << "\t" << list_str(vc.v);
            if (type) std::cout << "\t" << list_str(character_index(vc, *type).parts());
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o, Format fmt)
{
    IdentityId id = parse_identity(o.id);
    VerifyParams p;
    p.t = o.t;
    p.order = o.order;
    p.x_mode = o.x_mode == "symbolic" ? XMode::Symbolic : XMode::Specialized;
    p.u_mode = o.u_mode == "samples" ? UMode::Samples : UMode::Symbolic;
    p.z_mode = o.z_mode == "samples" ? ZMode::Samples : ZMode::Poly;
    p.form = o.form == "corrected" ? Form::Corrected : Form::Printed;
    for (const auto& s : o.samples) p.samples.push_back(parse_rational(s));
    p.degree_cap = o.cap;
    p.mutate = o.mutate;
    p.workers = o.workers;
    VerifyReport r = verify(id, p);
    if (!o.report.empty()) {
        std::ofstream out(o.report);
        if (!out) throw Error(ErrorKind::ParameterOutOfRange, "cannot write report to " + o.report);
        out << report_json(r).dump(2) << "\n";
    }
    emit_report(r, fmt, std::cout);
    return r.pass ? 0 : 1;
}

int cmd_list(Format fmt)
{
    json rows = json::array();
    for (IdentityId id : all_identities()) {
        const auto& info = identity_info(id);
        json row = {{"id", info.name}, {"corrected_form", has_corrected_form(id)}};
        if (info.kind == IdentityKind::Macdonald) row["min_t"] = info.min_t;
        rows.push_back(row);
    }
    if (fmt == Format::Json) {
        std::cout << json{{"schema", kSchema}, {"command", "list"}, {"identities", rows}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "id\tcorrected_form\n";
    for (const auto& row : rows) std::cout << row["id"].get<std::string>() << "\t" << (row["corrected_form"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"maclab: partitions, Littlewood decompositions and affine Macdonald / Nekrasov-Okounkov identity checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read option defaults from a TOML/INI file; command-line flags take precedence");
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}))->capture_default_str();
    app.add_option("--workers", o.workers, "Worker threads for sum sides (default: MACLAB_WORKERS or 1)")->check(CLI::NonNegativeNumber);

    auto* dec = app.add_subcommand("decompose", "Littlewood decomposition: t-core, t-quotient and charges");
    dec->add_option("--parts", o.parts, "Comma-separated parts, e.g. 4,4,3,2")->required();
    dec->add_option("--t", o.t, "Modulus t >= 2")->required();

    auto* vc = app.add_subcommand("vcoding", "V_{g,t}-coding of a partition (optionally checked against a root type)");
    vc->add_option("--parts", o.parts, "Comma-separated parts")->required();
    vc->add_option("--g", o.g, "Modulus g (ignored with --type)");
    vc->add_option("--t", o.t, "Rank t")->required();
    vc->add_option("--type", o.type, "Root type A, C, B, BV, CV, BC or D: use its family and modulus");

    auto* hk = app.add_subcommand("hooks", "Hook lengths, diagonal hooks and hooks divisible by t");
    hk->add_option("--parts", o.parts, "Comma-separated parts")->required();
    hk->add_option("--t", o.t, "Also list the hooks divisible by t");

    auto* sc = app.add_subcommand("scan", "List the members of a family up to a weight (TSV by default)");
    sc->add_option("--family", o.family, "P, SC, DD, DDp, DDp1 or DDp2");
    sc->add_option("--g", o.g, "Restrict to g-cores (0: whole family)");
    sc->add_option("--t", o.t, "Rank t (codings, decorated families)");
    sc->add_option("--type", o.type, "Root type: scan the cores attached to it");
    sc->add_option("--max-weight", o.max_weight, "Largest weight listed")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Verify an identity coefficient by coefficient");
    ver->add_option("--id", o.id, "Identity id (see the list command)")->required();
    ver->add_option("--t", o.t, "Rank t (Macdonald identities)");
    ver->add_option("--order", o.order, "Compare coefficients up to this power of T")->required()->check(CLI::NonNegativeNumber);
    ver->add_option("--x-mode", o.x_mode, "Macdonald: symbolic or specialized x")->check(CLI::IsMember({"symbolic", "specialized"}))->capture_default_str();
    ver->add_option("--u-mode", o.u_mode, "q-NO: symbolic u or numeric samples")->check(CLI::IsMember({"symbolic", "samples"}))->capture_default_str();
    ver->add_option("--z-mode", o.z_mode, "NO: polynomial in z or numeric samples")->check(CLI::IsMember({"poly", "samples"}))->capture_default_str();
    ver->add_option("--form", o.form, "printed statement or its corrected form")->check(CLI::IsMember({"printed", "corrected"}))->capture_default_str();
    ver->add_option("--samples", o.samples, "Sample values (rationals such as 2, -1, 1/2)")->delimiter(',');
    ver->add_option("--cap", o.cap, "q-adic (q-NO) or total (q,t)-degree cap; default depends on the identity");
    ver->add_flag("--mutate", o.mutate, "Flip the exponent of one product factor (self test: must fail)");
    ver->add_option("--report", o.report, "Also write the JSON report to this file");

    app.add_subcommand("list", "List the identity ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Format fmt = parse_format(o.format);
    try {
        if (dec->parsed()) return cmd_decompose(o, fmt);
        if (vc->parsed()) return cmd_vcoding(o, fmt);
        if (hk->parsed()) return cmd_hooks(o, fmt);
        if (sc->parsed()) return cmd_scan(o, app.count("--format") ? fmt : Format::Tsv);
        if (ver->parsed()) return cmd_verify(o, fmt);
        return cmd_list(fmt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
