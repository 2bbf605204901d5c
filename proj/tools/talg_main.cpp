/**
 * Command-line front end: one subcommand per artifact (group-info, scheme,
 * terwilliger, invariants, molien, epoly, code, verify-all), each emitting
 * a text or JSON report.
 *
 * Exit codes: 0 when every verification passed (published-value
 * disagreements carry explicit discrepancy notes and do not fail the run),
 * 1 when a verification leg failed, 2 on usage errors, 3 on internal
 * errors.
 */
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "talg/errors.hpp"
#include "talg/report.hpp"

namespace {

struct Options
{
    std::string group;
    std::string generatorFile;
    std::string format = "text";
    std::string fixture;
    std::string duality;
    int terms = 40;
    int threads = 0;
    int maxDepth = 4;
    long cap = 100000;
    int degree = 0;
};

std::vector<talg::Mat2> loadGenerators(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw talg::ParseError("cannot open generator file '" + path + "'");
    }
    talg::Json doc;
    try
    {
        doc = talg::Json::parse(in);
    }
    catch (const std::exception& e)
    {
        throw talg::ParseError("generator file '" + path + "': " + e.what());
    }
    if (!doc.is_array() || doc.empty())
    {
        throw talg::ParseError("generator file '" + path
                               + "': expected a nonempty array of 2x2 matrices");
    }
    std::vector<talg::Mat2> gens;
    for (std::size_t m = 0; m < doc.size(); ++m)
    {
        const talg::Json& mat = doc[m];
        if (!mat.is_array() || mat.size() != 2 || !mat[0].is_array() || mat[0].size() != 2
            || !mat[1].is_array() || mat[1].size() != 2)
        {
            throw talg::ParseError("generator file '" + path + "': matrix "
                                   + std::to_string(m) + " is not a 2x2 array");
        }
        talg::CycNum entries[4];
        for (int r = 0; r < 2; ++r)
        {
            for (int c = 0; c < 2; ++c)
            {
                const talg::Json& cell = mat[r][c];
                if (!cell.is_string())
                {
                    throw talg::ParseError("generator file '" + path + "': matrix "
                                           + std::to_string(m) + " entry (" + std::to_string(r)
                                           + "," + std::to_string(c) + ") is not a string");
                }
                try
                {
                    entries[2 * r + c] = talg::CycNum::parse(cell.get<std::string>());
                }
                catch (const talg::Error& e)
                {
                    throw talg::ParseError("generator file '" + path + "': matrix "
                                           + std::to_string(m) + " entry (" + std::to_string(r)
                                           + "," + std::to_string(c) + "): " + e.what());
                }
            }
        }
        gens.push_back(talg::makeMat2(entries[0], entries[1], entries[2], entries[3]));
    }
    return gens;
}

/** Built-in group by name, or the closure of a generator file. */
talg::MatGroup resolveGroup(const Options& o, std::string& name)
{
    if (!o.generatorFile.empty())
    {
        name.clear();
        return talg::generateGroup(loadGenerators(o.generatorFile), o.cap);
    }
    name = o.group;
    return talg::builtinGroup(name);
}

int emit(const talg::Json& report, const std::string& format)
{
    if (format == "json")
    {
        std::cout << report.dump(2) << "\n";
    }
    else
    {
        std::cout << talg::renderText(report);
    }
    return talg::reportClean(report) ? 0 : 1;
}

void addOutputFlags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Output format (text or json)")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--threads", o.threads,
                    "Worker threads; 0 = automatic (TERWILLIGER_THREADS honored)")
        ->capture_default_str();
}

void addGroupFlags(CLI::App* cmd, Options& o, bool allowGeneratorFile)
{
    cmd->add_option("--group", o.group, "Built-in group: I, II, III or IV")
        ->check(CLI::IsMember({"I", "II", "III", "IV"}));
    if (allowGeneratorFile)
    {
        cmd->add_option("--generators", o.generatorFile,
                        "JSON file: array of 2x2 arrays of cyclotomic entries");
        cmd->add_option("--cap", o.cap, "Group enumeration cap")->capture_default_str();
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Terwilliger algebras and invariant theory of the self-dual code "
                 "groups G_I..G_IV"};
    app.require_subcommand(1);
    Options o;

    CLI::App* groupInfo = app.add_subcommand("group-info", "Order, class count, class sizes");
    addGroupFlags(groupInfo, o, true);
    addOutputFlags(groupInfo, o);

    CLI::App* scheme =
        app.add_subcommand("scheme", "Association scheme and Bose-Mesner verification");
    addGroupFlags(scheme, o, true);
    addOutputFlags(scheme, o);

    CLI::App* terwilliger = app.add_subcommand(
        "terwilliger", "Dimension, block counts, center and Wedderburn degrees");
    addGroupFlags(terwilliger, o, false);
    terwilliger->add_option("--max-depth", o.maxDepth, "Basis closure depth guard")
        ->capture_default_str();
    addOutputFlags(terwilliger, o);

    CLI::App* invariants =
        app.add_subcommand("invariants", "E-polynomials and the generation certificate");
    addGroupFlags(invariants, o, false);
    invariants->add_option("--terms", o.terms, "Molien series truncation")
        ->capture_default_str();
    addOutputFlags(invariants, o);

    CLI::App* molien = app.add_subcommand("molien", "Molien series coefficients");
    addGroupFlags(molien, o, true);
    molien->add_option("--terms", o.terms, "Number of coefficients")->capture_default_str();
    addOutputFlags(molien, o);

    CLI::App* epoly = app.add_subcommand("epoly", "A single E-polynomial");
    addGroupFlags(epoly, o, true);
    epoly->add_option("--degree", o.degree, "Reynolds degree k")->required();
    addOutputFlags(epoly, o);

    CLI::App* code = app.add_subcommand("code", "Weight enumerator and type of a fixture");
    code->add_option("--fixture", o.fixture, "repetition, hamming8, tetracode or hexacode")
        ->required()
        ->check(CLI::IsMember({"repetition", "hamming8", "tetracode", "hexacode"}));
    code->add_option("--dual", o.duality, "Inner product (euclidean or hermitian)")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    addOutputFlags(code, o);

    CLI::App* verifyAll =
        app.add_subcommand("verify-all", "The complete verification report");
    verifyAll->add_option("--group", o.group, "Restrict to one group")
        ->check(CLI::IsMember({"I", "II", "III", "IV"}));
    verifyAll->add_option("--terms", o.terms, "Molien series truncation")
        ->capture_default_str();
    verifyAll->add_option("--max-depth", o.maxDepth, "Basis closure depth guard")
        ->capture_default_str();
    addOutputFlags(verifyAll, o);

    CLI11_PARSE(app, argc, argv);

    try
    {
        talg::ReportOptions opts;
        opts.terms = o.terms;
        opts.threads = o.threads;
        opts.maxDepth = o.maxDepth;
        opts.cap = o.cap;

        if (groupInfo->parsed() || scheme->parsed() || molien->parsed() || epoly->parsed())
        {
            if (o.group.empty() == o.generatorFile.empty())
            {
                std::cerr << "error: give exactly one of --group and --generators\n";
                return 2;
            }
        }
        else if (terwilliger->parsed() || invariants->parsed())
        {
            if (o.group.empty())
            {
                std::cerr << "error: --group is required\n";
                return 2;
            }
        }

        if (groupInfo->parsed())
        {
            std::string name;
            const talg::MatGroup group = resolveGroup(o, name);
            const talg::ConjugacyClasses classes = talg::conjugacyClasses(group);
            return emit(talg::groupInfoReport(name, group, classes), o.format);
        }
        if (scheme->parsed())
        {
            std::string name;
            const talg::MatGroup group = resolveGroup(o, name);
            const talg::Scheme sch = talg::buildScheme(group);
            return emit(talg::schemeReport(name, sch, talg::intersectionNumbers(sch)),
                        o.format);
        }
        if (terwilliger->parsed())
        {
            const talg::GroupArtifacts art = talg::computeGroupArtifacts(o.group, opts);
            return emit(talg::terwilligerReport(art), o.format);
        }
        if (invariants->parsed())
        {
            return emit(talg::invariantsReport(o.group, opts), o.format);
        }
        if (molien->parsed())
        {
            std::string name;
            const talg::MatGroup group = resolveGroup(o, name);
            return emit(talg::molienReport(name, group, o.terms, o.threads), o.format);
        }
        if (epoly->parsed())
        {
            std::string name;
            const talg::MatGroup group = resolveGroup(o, name);
            return emit(talg::epolyReport(name, group, o.degree, o.threads), o.format);
        }
        if (code->parsed())
        {
            const talg::Duality duality =
                o.duality.empty()
                    ? talg::fixtureDuality(o.fixture)
                    : (o.duality == "hermitian" ? talg::Duality::Hermitian
                                                : talg::Duality::Euclidean);
            return emit(talg::codeReport(o.fixture, duality, opts), o.format);
        }
        if (verifyAll->parsed())
        {
            return emit(talg::verifyAllReport(o.group, opts), o.format);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    }
    catch (const talg::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception& e)
    {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
