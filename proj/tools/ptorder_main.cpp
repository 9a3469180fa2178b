// Command-line front end: exact bi-order computations on punctured-torus
// bundle groups, plus the seeded verification suites. Exit codes: 0 success
// or suite pass, 1 suite failure, 2 usage/config error, 3 resource cap
// exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ptorder/errors.hpp"
#include "ptorder/magnus.hpp"
#include "ptorder/orders.hpp"
#include "ptorder/verify.hpp"

namespace {

using namespace ptorder;

struct OrderFlags {
	std::string config_path;
	std::optional<std::string> kind, monodromy, e1, e2, tensor_lex;
	std::optional<int> magnus_cap, hard_cap;
	std::optional<bool> tau_positive;

	void attach(CLI::App *cmd)
	{
		cmd->add_option("--config", config_path, "flat key = value config file");
		cmd->add_option("--order", kind, "standard | nonstandard");
		cmd->add_option("--monodromy", monodromy,
		                "twist word over x, y, X, Y (e.g. xy)");
		cmd->add_option("--e1", e1, "+lambda | -lambda | +mu | -mu");
		cmd->add_option("--e2", e2, "+lambda | -lambda | +mu | -mu");
		cmd->add_option("--tensor-lex", tensor_lex, "lambda_first | mu_first");
		cmd->add_option("--magnus-cap", magnus_cap, "starting Magnus degree cap");
		cmd->add_option("--hard-cap", hard_cap, "hard Magnus degree cap");
		cmd->add_option("--tau-positive", tau_positive,
		                "orient the circle factor positively");
	}

	// Config file first, then command-line flags override.
	OrderConfig resolve() const
	{
		OrderConfig cfg = config_path.empty() ? OrderConfig{}
		                                      : OrderConfig::from_file(config_path);
		if (kind) cfg.set("kind", *kind);
		if (monodromy) cfg.set("monodromy", *monodromy);
		if (e1) cfg.set("e1", *e1);
		if (e2) cfg.set("e2", *e2);
		if (tensor_lex) cfg.set("tensor_lex", *tensor_lex);
		if (magnus_cap) cfg.magnus_cap = *magnus_cap;
		if (hard_cap) cfg.hard_cap = *hard_cap;
		if (tau_positive) cfg.tau_positive = *tau_positive;
		return cfg;
	}
};

void write_report(const SuiteReport &rep, const std::string &path)
{
	if (path.empty())
		return;
	std::ofstream out(path);
	if (!out)
		throw ConfigError("cannot write report file '" + path + "'");
	out << rep.to_json();
}

void print_summary(const SuiteReport &rep)
{
	std::cout << "suite=" << rep.suite_id << " samples=" << rep.samples
	          << " failures=" << rep.failures.size()
	          << " passed=" << (rep.passed ? "true" : "false") << "\n";
	for (std::size_t i = 0; i < rep.failures.size() && i < 5; ++i)
	{
		const Failure &f = rep.failures[i];
		std::cout << "failure index=" << f.index << " inputs=" << f.inputs
		          << " expected=" << f.expected << " got=" << f.got << "\n";
	}
}

int run(int argc, char **argv)
{
	CLI::App app{"exact bi-orderings of once-punctured-torus bundle groups"};
	app.require_subcommand(1);

	// info
	auto *info = app.add_subcommand("info", "monodromy matrix, classification and eigenvalue data");
	std::string info_twists = "xy";
	info->add_option("--monodromy", info_twists, "twist word")->required();

	// sign
	auto *sign_cmd = app.add_subcommand("sign", "sign of a word under the configured order");
	OrderFlags sign_flags;
	sign_flags.attach(sign_cmd);
	std::string sign_word;
	sign_cmd->add_option("--word", sign_word, "word over a, b, A, B with (), [,], ^")->required();

	// compare
	auto *cmp_cmd = app.add_subcommand("compare", "compare two words under the configured order");
	OrderFlags cmp_flags;
	cmp_flags.attach(cmp_cmd);
	std::string cmp_lhs, cmp_rhs;
	cmp_cmd->add_option("--lhs", cmp_lhs, "left word")->required();
	cmp_cmd->add_option("--rhs", cmp_rhs, "right word")->required();

	// magnus
	auto *mag_cmd = app.add_subcommand("magnus", "truncated Magnus expansion dump");
	std::string mag_word;
	int mag_cap = 8;
	mag_cmd->add_option("--word", mag_word, "word to expand")->required();
	mag_cmd->add_option("--cap", mag_cap, "truncation degree");

	// p2
	auto *p2_cmd = app.add_subcommand("p2", "cell winding numbers of a commutator-subgroup word");
	std::string p2_word;
	p2_cmd->add_option("--word", p2_word, "word with zero exponent sums")->required();

	// verify
	auto *ver_cmd = app.add_subcommand("verify", "run a property suite and emit a JSON report");
	OrderFlags ver_flags;
	ver_flags.attach(ver_cmd);
	std::string ver_suite, ver_selector, ver_report;
	std::uint64_t ver_samples = 1000, ver_seed = 0;
	ver_cmd->add_option("--suite", ver_suite,
	                    "cone_axioms | invariance | convexity | cover_laws | "
	                    "magnus_laws | chain_Cgamma | standard_stability | "
	                    "witnesses | mutation_coverage")
	    ->required();
	ver_cmd->add_option("--samples", ver_samples, "number of seeded samples");
	ver_cmd->add_option("--seed", ver_seed, "RNG seed");
	ver_cmd->add_option("--selector", ver_selector,
	                    "convexity subgroup: G2 | G3 | G4 | Cgamma:m,n");
	ver_cmd->add_option("--report", ver_report, "path for the JSON report");

	// witnesses
	auto *wit_cmd = app.add_subcommand("witnesses", "reproduce the lemma witness checks");
	OrderFlags wit_flags;
	wit_flags.attach(wit_cmd);
	std::string wit_report;
	wit_cmd->add_option("--report", wit_report, "path for the JSON report");

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	if (info->parsed())
	{
		Monodromy m = Monodromy::from_twists(info_twists);
		Classification cls = m.classification();
		std::cout << "monodromy: " << m.twists() << "\n"
		          << "matrix: " << m.matrix().str() << "\n"
		          << "trace: " << m.matrix().trace().str() << "\n"
		          << "det: " << m.matrix().det().str() << "\n"
		          << "hyperbolic: " << (cls.hyperbolic ? "true" : "false") << "\n"
		          << "untwisted: " << (cls.untwisted ? "true" : "false") << "\n";
		if (cls.hyperbolic && cls.untwisted)
		{
			EigenData eig = EigenData::from_matrix(m.matrix());
			std::cout << "D: " << eig.D.str() << "\n"
			          << "lambda: " << eig.lambda.str() << "\n"
			          << "mu: " << eig.mu.str() << "\n"
			          << "e_lambda: (" << eig.e_lambda[0].str() << ", "
			          << eig.e_lambda[1].str() << ")\n"
			          << "e_mu: (" << eig.e_mu[0].str() << ", "
			          << eig.e_mu[1].str() << ")\n";
		}
		return 0;
	}

	if (sign_cmd->parsed())
	{
		Order order = Order::build(sign_flags.resolve());
		std::cout << to_string(order.sign(parse_word(sign_word))) << "\n";
		return 0;
	}

	if (cmp_cmd->parsed())
	{
		Order order = Order::build(cmp_flags.resolve());
		std::cout << to_string(order.compare(parse_word(cmp_lhs), parse_word(cmp_rhs)))
		          << "\n";
		return 0;
	}

	if (mag_cmd->parsed())
	{
		std::cout << MagnusSeries::expand(parse_word(mag_word), mag_cap).dump();
		return 0;
	}

	if (p2_cmd->parsed())
	{
		std::cout << p2(parse_word(p2_word)).dump();
		return 0;
	}

	if (ver_cmd->parsed())
	{
		OrderConfig cfg = ver_flags.resolve();
		std::optional<ConvexitySelector> sel;
		if (!ver_selector.empty())
			sel = ConvexitySelector::parse(ver_selector);
		SuiteReport rep = run_suite(ver_suite, cfg, ver_samples, ver_seed, sel);
		write_report(rep, ver_report);
		print_summary(rep);
		return rep.passed ? 0 : 1;
	}

	if (wit_cmd->parsed())
	{
		SuiteReport rep = check_lemma_witnesses(wit_flags.resolve());
		write_report(rep, wit_report);
		print_summary(rep);
		return rep.passed ? 0 : 1;
	}

	return 2;
}

} // namespace

int main(int argc, char **argv)
{
	try
	{
		return run(argc, argv);
	}
	catch (const ResourceLimit &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch (const ParseError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const NotInCommutatorSubgroup &e)
	{
		std::cerr << "error: NotInCommutatorSubgroup: " << e.what() << "\n";
		return 2;
	}
	catch (const ConfigError &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "internal error: " << e.what() << "\n";
		return 2;
	}
}
