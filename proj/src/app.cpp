#include "votelab/app.hpp"

#include <ostream>
#include <sstream>

#include "votelab/ballots.hpp"
#include "votelab/dropout.hpp"
#include "votelab/harness.hpp"
#include "votelab/report.hpp"

namespace votelab {

namespace {

void emit(const RunManifest& m, std::ostream& console, const std::string& text)
{
    if (m.out)
        write_file(*m.out, text);
    else
        console << text;
}

void run_table1(const RunManifest& m, std::ostream& console)
{
    std::vector<Table1Result> results;
    for (StudyType t : m.types) {
        for (std::size_t c : m.candidates) {
            StudyConfig cfg;
            cfg.study_type = t;
            cfg.candidates = c;
            cfg.voters = m.voters;
            cfg.target_kept_trials = m.trials;
            cfg.master_seed = m.seed;
            cfg.workers = m.workers;
            results.push_back(run_table1_study(cfg));
        }
    }
    std::ostringstream text;
    if (m.format == OutputFormat::Json) {
        write_table1_json(text, m, results);
        emit(m, console, text.str());
        return;
    }
    write_table1_csv(text, m, results);
    emit(m, console, text.str());
    if (m.out) {
        std::ostringstream precise;
        write_table1_precise_csv(precise, m, results);
        write_file(precise_companion_path(*m.out), precise.str());
    }
}

void run_dropout(const RunManifest& m, std::ostream& console, DropoutStudy study)
{
    DropoutConfig cfg;
    cfg.study = study;
    cfg.target_kept_trials = m.trials;
    cfg.voters = m.voters;
    cfg.master_seed = m.seed;
    cfg.workers = m.workers;
    const DropoutResult r = run_dropout_study(cfg);
    std::ostringstream text;
    if (m.format == OutputFormat::Json)
        write_dropout_json(text, m, r);
    else
        write_dropout_csv(text, m, r);
    emit(m, console, text.str());
}

void run_election(const RunManifest& m, std::ostream& console)
{
    const BallotSet ballots = ingest_ballots(*m.ballots, m.scale);
    const ElectionReport report = evaluate_election(ballots);
    std::ostringstream text;
    if (m.format == OutputFormat::Json)
        write_election_json(text, m, report);
    else
        write_election_csv(text, m, report);
    emit(m, console, text.str());
}

}  // namespace

void run_manifest(const RunManifest& m, std::ostream& console)
{
    switch (m.command) {
    case Command::Table1: run_table1(m, console); break;
    case Command::Dropout1: run_dropout(m, console, DropoutStudy::ParadoxFreeWinnerWithdraws); break;
    case Command::Dropout2: run_dropout(m, console, DropoutStudy::ParadoxWinnerWithdraws); break;
    case Command::Dropout3: run_dropout(m, console, DropoutStudy::ParadoxLoserWithdraws); break;
    case Command::Election: run_election(m, console); break;
    }
}

}  // namespace votelab
