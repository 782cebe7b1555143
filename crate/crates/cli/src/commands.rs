use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context};

use relsim_core::analogy::{cumulative_top_k, pool_ranks, solve, ScoredQuestion};
use relsim_core::cache::{Provenance, VectorCache};
use relsim_core::data::{parse_noun_modifiers, parse_pairs, parse_questions};
use relsim_core::index::{load_corpus, IndexProvider, PositionalIndex};
use relsim_core::nounmod::{loocv, macroaverage, Labeled};
use relsim_core::relation::{build_vectors, JoiningTermTable, RelationVector, WordPair};
use relsim_core::report::{format_class_table, format_eval_report, format_top_k, sweep_csv};
use relsim_core::sweep::{nounmod_sweep, sat_sweep, SweepGrid, SweepRow};
use relsim_core::taxonomy::Granularity;
use relsim_core::AnalogyQuestion;

use crate::{CacheArgs, DecisionArgs, Failure, VectorConfig, VectorsArgs};

type Result<T> = std::result::Result<T, Failure>;

fn internal(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Internal(e.into())
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)
}

fn term_table(config: &VectorConfig) -> Result<JoiningTermTable> {
    match &config.terms {
        None => Ok(JoiningTermTable::default()),
        Some(path) => Ok(JoiningTermTable::parse(&read(path)?).with_context(|| path.display().to_string())?),
    }
}

fn provenance(index: &PositionalIndex, table: &JoiningTermTable, config: &VectorConfig) -> Provenance {
    Provenance {
        corpus: index.fingerprint(),
        terms: table.checksum(),
        mode: config.mode,
    }
}

pub fn index_build(corpus: &Path, output: &Path) -> Result<()> {
    let docs = load_corpus(corpus)?;
    if docs.is_empty() {
        eprintln!("warning: corpus {} contains no documents", corpus.display());
    }
    let index = PositionalIndex::build(docs)?;
    index.save(output).map_err(internal)?;
    println!("documents   {}", index.doc_count());
    println!("tokens      {}", index.token_count());
    println!("vocabulary  {}", index.vocabulary_size());
    println!("fingerprint {}", index.fingerprint());
    Ok(())
}

pub fn vectors(args: VectorsArgs) -> Result<()> {
    let index = PositionalIndex::load(&args.index)?;
    let table = term_table(&args.config)?;
    let expected = provenance(&index, &table, &args.config);

    let mut cache = if args.cache.exists() {
        let cache = VectorCache::load(&args.cache)?;
        cache.check_provenance(&expected)?;
        cache
    } else {
        VectorCache::new(expected)
    };

    let mut pairs = BTreeSet::new();
    for path in &args.questions {
        let questions = parse_questions(&read(path)?).with_context(|| path.display().to_string())?;
        pairs.extend(questions.iter().flat_map(|q| q.pairs().cloned()));
    }
    for path in &args.nounmod {
        let items = parse_noun_modifiers(&read(path)?).with_context(|| path.display().to_string())?;
        pairs.extend(items.iter().map(|i| i.pair()));
    }
    for path in &args.pairs {
        pairs.extend(parse_pairs(&read(path)?).with_context(|| path.display().to_string())?);
    }

    let missing: Vec<WordPair> = pairs.iter().filter(|p| !cache.contains(p)).cloned().collect();
    let provider = IndexProvider::new(&index, args.config.mode);
    for v in build_vectors(&provider, &missing, &table).map_err(internal)? {
        cache.insert(&v);
    }
    cache.save(&args.cache).map_err(internal)?;
    println!("pairs       {}", pairs.len());
    println!("reused      {}", pairs.len() - missing.len());
    println!("computed    {}", missing.len());
    println!("cache size  {}", cache.len());
    Ok(())
}

fn open_cache(args: &CacheArgs) -> Result<VectorCache> {
    let cache = VectorCache::load(&args.cache)?;
    if let Some(index_path) = &args.index {
        let index = PositionalIndex::load(index_path)?;
        let table = term_table(&args.config)?;
        cache.check_provenance(&provenance(&index, &table, &args.config))?;
    }
    Ok(cache)
}

/// Looks up every pair, failing with the full list of absent ones.
fn lookup<'a>(cache: &VectorCache, pairs: impl IntoIterator<Item = &'a WordPair>) -> Result<Vec<RelationVector>> {
    let mut found = Vec::new();
    let mut missing = BTreeSet::new();
    for p in pairs {
        match cache.get(p) {
            Some(v) => found.push(v),
            None => {
                missing.insert(p.key());
            }
        }
    }
    if missing.is_empty() {
        Ok(found)
    } else {
        Err(Failure::Input(anyhow!(
            "{} pair(s) missing from the vector cache: {}",
            missing.len(),
            missing.into_iter().collect::<Vec<_>>().join(", ")
        )))
    }
}

fn score_questions(cache: &VectorCache, questions: &[AnalogyQuestion]) -> Result<Vec<ScoredQuestion>> {
    let all = lookup(cache, questions.iter().flat_map(|q| q.pairs()))?;
    let mut rest = all.as_slice();
    Ok(questions
        .iter()
        .map(|q| {
            let (vs, tail) = rest.split_at(1 + q.choices.len());
            rest = tail;
            ScoredQuestion::new(&vs[0], &vs[1..], q.answer)
        })
        .collect())
}

fn emit_sweep(rows: &[SweepRow], csv: Option<&Path>) -> Result<()> {
    let text = sweep_csv(rows);
    match csv {
        Some(path) => {
            fs::write(path, text)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(internal)?;
            println!("wrote {} sweep rows to {}", rows.len(), path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

pub fn sat_solve(questions: &Path, cache: CacheArgs, decision: DecisionArgs) -> Result<()> {
    let questions = parse_questions(&read(questions)?).with_context(|| questions.display().to_string())?;
    let scored = score_questions(&open_cache(&cache)?, &questions)?;
    let tie_break = decision.tie_break.with_seed(decision.seed);
    match decision.sweep {
        Some(grid) => {
            let grid = grid.unwrap_or(SweepGrid::ANALOGY);
            emit_sweep(&sat_sweep(&scored, &grid, tie_break), decision.csv.as_deref())
        }
        None => {
            let report = solve(&scored, decision.threshold, tie_break);
            print!("{}", format_eval_report(&report, decision.threshold));
            Ok(())
        }
    }
}

pub fn sat_rank(questions: &Path, cache: CacheArgs, top: usize) -> Result<()> {
    let questions = parse_questions(&read(questions)?).with_context(|| questions.display().to_string())?;
    let cache = open_cache(&cache)?;
    let stems = lookup(&cache, questions.iter().map(|q| &q.stem))?;
    let answers = lookup(&cache, questions.iter().map(|q| &q.choices[q.answer]))?;
    let (stems, answers): (Vec<_>, Vec<_>) = stems
        .into_iter()
        .zip(answers)
        .filter(|(s, _)| !s.is_zero())
        .unzip();
    println!(
        "{} questions, {} with zero stem vectors dropped, pool of {}",
        questions.len(),
        questions.len() - stems.len(),
        stems.len()
    );
    let ranks = pool_ranks(&stems, &answers);
    print!("{}", format_top_k(&cumulative_top_k(&ranks, top)));
    Ok(())
}

pub fn nounmod_eval(data: &Path, cache: CacheArgs, granularity: Granularity, decision: DecisionArgs) -> Result<()> {
    let items = parse_noun_modifiers(&read(data)?).with_context(|| data.display().to_string())?;
    if items.len() < 2 {
        return Err(Failure::Input(anyhow!("leave-one-out needs at least two labelled pairs")));
    }
    let pairs: Vec<WordPair> = items.iter().map(|i| i.pair()).collect();
    let vectors = lookup(&open_cache(&cache)?, &pairs)?;
    let classes: Vec<usize> = items
        .iter()
        .map(|i| granularity.label_index(&i.label).expect("labels validated on parse"))
        .collect();
    let labeled: Vec<Labeled<'_>> = classes
        .iter()
        .zip(&vectors)
        .map(|(&c, v)| (c, v.values.as_slice()))
        .collect();
    let labels = granularity.labels();
    let tie_break = decision.tie_break.with_seed(decision.seed);

    match decision.sweep {
        Some(grid) => {
            let grid = grid.unwrap_or(SweepGrid::NOUN_MODIFIER);
            emit_sweep(&nounmod_sweep(&labeled, &labels, &grid, tie_break), decision.csv.as_deref())
        }
        None => {
            let run = loocv(&labeled, labels.len(), decision.threshold, tie_break);
            let metrics = run.class_metrics(&labels);
            println!("{} classes, {} pairs, threshold {}", labels.len(), run.n_items(), decision.threshold);
            print!("{}", format_class_table(&metrics, &macroaverage(&metrics)));
            println!(
                "correct {} / {} ({:.1}%), abstained {}, double guesses {}",
                run.correct(),
                run.n_items(),
                100.0 * run.correct() as f64 / run.n_items() as f64,
                run.abstained(),
                run.doubles()
            );
            Ok(())
        }
    }
}
