//! Run orchestration: a single TOML config drives ingest → benchmark fit →
//! training → simulation → evaluation, with every artifact written under a
//! run directory named by the config hash. Seeds are explicit arguments, RNG
//! state is checkpointed, and reruns with identical config and seed produce
//! byte-identical outputs.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::book::BookState;
use crate::ingest::{
    encode_flow, interarrival_gaps, parse_feed, slice_flow, EmpiricalSampler, EncodeCounters,
    EncodedFlow, FeedFormat, IngestError,
};
use crate::poisson::{PoissonError, PoissonRates};
use crate::report::{build_report, EvalConfig, EvalReport, HorizonSpec, ReportError};
use crate::seqgan::{
    adversarial_train, generate, pretrain_discriminator, pretrain_generator_mle, Adam, AdamConfig,
    DiscMetrics, DiscriminatorParams, GeneratorParams, ModelConfig, RoundMetrics, SeqGanError,
    TrainConfig,
};
use crate::simulate::{replay, resample_locf, run_paths, FlowModel, PathResult, SimError, SimSpec};
use crate::stats::StatsError;
use crate::tokenize::{OrderEvent, TokenError, Vocabulary};

/// Failures grouped by exit-code category: config (2), parse (3),
/// numeric (4), io (5).
#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("config: {0}")]
    Config(String),
    #[error("parse: {0}")]
    Parse(String),
    #[error("numeric: {0}")]
    Numeric(String),
    #[error("io: {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Config(_) => 2,
            PipelineError::Parse(_) => 3,
            PipelineError::Numeric(_) => 4,
            PipelineError::Io { .. } => 5,
        }
    }

    fn io(path: &Path, source: io::Error) -> Self {
        PipelineError::Io { path: path.display().to_string(), source }
    }

    fn prefix_parse(self, path: &str) -> Self {
        match self {
            PipelineError::Parse(msg) => PipelineError::Parse(format!("{path}: {msg}")),
            other => other,
        }
    }
}

impl From<IngestError> for PipelineError {
    fn from(e: IngestError) -> Self {
        match e {
            IngestError::Io(source) => {
                PipelineError::Io { path: "(feed)".to_string(), source }
            }
            IngestError::Malformed { .. } | IngestError::TimeOrder { .. } | IngestError::EmptyFeed => {
                PipelineError::Parse(e.to_string())
            }
            other => PipelineError::Config(other.to_string()),
        }
    }
}

impl From<TokenError> for PipelineError {
    fn from(e: TokenError) -> Self {
        PipelineError::Config(e.to_string())
    }
}

impl From<SeqGanError> for PipelineError {
    fn from(e: SeqGanError) -> Self {
        match e {
            SeqGanError::NumericFailure(_) => PipelineError::Numeric(e.to_string()),
            other => PipelineError::Config(other.to_string()),
        }
    }
}

impl From<PoissonError> for PipelineError {
    fn from(e: PoissonError) -> Self {
        match e {
            PoissonError::Io(source) => PipelineError::Io { path: "(rates)".to_string(), source },
            PoissonError::Json(_) | PoissonError::BadRateFile(_) => {
                PipelineError::Parse(e.to_string())
            }
            other => PipelineError::Config(other.to_string()),
        }
    }
}

impl From<SimError> for PipelineError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::BadSpec(_) | SimError::Token(_) => PipelineError::Config(e.to_string()),
            SimError::Gen(inner) => inner.into(),
            SimError::Poisson(inner) => inner.into(),
            other => PipelineError::Numeric(other.to_string()),
        }
    }
}

impl From<StatsError> for PipelineError {
    fn from(e: StatsError) -> Self {
        PipelineError::Numeric(e.to_string())
    }
}

impl From<ReportError> for PipelineError {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::BadConfig(msg) => PipelineError::Config(msg),
            ReportError::Stats(inner) => inner.into(),
        }
    }
}

// ---------------------------------------------------------------------------
// Config

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DataSection {
    pub train_feed: PathBuf,
    pub test_feed: PathBuf,
    #[serde(default = "default_format")]
    pub format: String,
    pub tick_size: f64,
    #[serde(default = "default_q_max")]
    pub q_max: i64,
    #[serde(default = "default_slice_len")]
    pub slice_len: usize,
}

fn default_format() -> String {
    "ndjson".to_string()
}

fn default_q_max() -> i64 {
    10
}

fn default_slice_len() -> usize {
    400
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct TrainSection {
    pub mle_epochs: usize,
    pub rounds: usize,
    pub g_steps: usize,
    pub d_steps: usize,
    pub d_epochs: usize,
    pub n_rollouts: usize,
    pub batch_size: usize,
    pub lr_gen: f64,
    pub lr_disc: f64,
    pub clip_norm: f64,
}

impl Default for TrainSection {
    fn default() -> Self {
        let t = TrainConfig::default();
        TrainSection {
            mle_epochs: t.mle_epochs,
            rounds: t.rounds,
            g_steps: t.g_steps,
            d_steps: t.d_steps,
            d_epochs: t.d_epochs,
            n_rollouts: t.n_rollouts,
            batch_size: t.batch_size,
            lr_gen: t.lr_gen,
            lr_disc: t.lr_disc,
            clip_norm: t.clip_norm,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SimSection {
    /// Seconds of simulated flow per path.
    pub horizon: f64,
    pub n_paths: usize,
    /// Mid-price grid step in seconds.
    pub sample_step: f64,
    pub max_events: usize,
}

impl Default for SimSection {
    fn default() -> Self {
        SimSection { horizon: 172_800.0, n_paths: 100, sample_step: 60.0, max_events: 5_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalSection {
    pub ks_alpha: f64,
    pub jb_alpha: f64,
    pub tail_fraction: f64,
    /// Horizons for the report tables; the standard 1 h / 6 h / 48 h ladder
    /// (clipped to the simulation horizon) when omitted.
    pub horizons: Option<Vec<HorizonSpec>>,
}

impl Default for EvalSection {
    fn default() -> Self {
        EvalSection { ks_alpha: 0.1, jb_alpha: 0.01, tail_fraction: 0.05, horizons: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub data: DataSection,
    #[serde(default)]
    pub model: ModelConfig,
    #[serde(default)]
    pub train: TrainSection,
    #[serde(default)]
    pub sim: SimSection,
    #[serde(default)]
    pub eval: EvalSection,
    #[serde(default = "default_artifacts_dir")]
    pub artifacts_dir: PathBuf,
}

fn default_artifacts_dir() -> PathBuf {
    PathBuf::from("runs")
}

impl RunConfig {
    /// Window length T: half a slice.
    pub fn seq_len(&self) -> usize {
        self.data.slice_len / 2
    }

    pub fn train_config(&self) -> TrainConfig {
        TrainConfig {
            seq_len: self.seq_len(),
            n_rollouts: self.train.n_rollouts,
            rounds: self.train.rounds,
            g_steps: self.train.g_steps,
            d_steps: self.train.d_steps,
            d_epochs: self.train.d_epochs,
            mle_epochs: self.train.mle_epochs,
            batch_size: self.train.batch_size,
            lr_gen: self.train.lr_gen,
            lr_disc: self.train.lr_disc,
            clip_norm: self.train.clip_norm,
        }
    }

    pub fn eval_config(&self) -> Result<EvalConfig, PipelineError> {
        let horizons = match &self.eval.horizons {
            Some(h) => h.clone(),
            None => EvalConfig::standard(self.sim.sample_step, self.sim.horizon).horizons,
        };
        if horizons.is_empty() {
            return Err(PipelineError::Config(
                "no evaluation horizon fits the simulation horizon; set [eval] horizons".into(),
            ));
        }
        Ok(EvalConfig {
            sample_step: self.sim.sample_step,
            horizons,
            ks_alpha: self.eval.ks_alpha,
            jb_alpha: self.eval.jb_alpha,
            tail_fraction: self.eval.tail_fraction,
        })
    }

    fn feed_format(&self) -> Result<FeedFormat, PipelineError> {
        FeedFormat::from_str(&self.data.format)
            .map_err(|e| PipelineError::Config(e.to_string()))
    }

    fn validate(&self) -> Result<(), PipelineError> {
        let d = &self.data;
        if !(d.tick_size > 0.0 && d.tick_size.is_finite()) {
            return Err(PipelineError::Config(format!(
                "tick_size must be positive, got {}",
                d.tick_size
            )));
        }
        if d.slice_len < 2 || d.slice_len % 2 != 0 {
            return Err(PipelineError::Config(format!(
                "slice_len must be even and at least 2, got {}",
                d.slice_len
            )));
        }
        self.feed_format()?;
        Vocabulary::new(d.q_max)?;
        for feed in [&d.train_feed, &d.test_feed] {
            if !feed.is_file() {
                return Err(PipelineError::Config(format!(
                    "feed file does not exist: {}",
                    feed.display()
                )));
            }
        }
        if !(self.sim.horizon > 0.0 && self.sim.sample_step > 0.0) {
            return Err(PipelineError::Config(
                "sim horizon and sample_step must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// A loaded config plus the identity derived from its raw bytes.
#[derive(Clone, Debug)]
pub struct Run {
    pub config: RunConfig,
    pub config_hash: String,
}

fn hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

/// Reads and validates a config file. Relative paths inside the config are
/// resolved against the config file's directory.
pub fn load_config(path: &Path) -> Result<Run, PipelineError> {
    let raw = fs::read(path).map_err(|e| PipelineError::io(path, e))?;
    let mut config: RunConfig = toml::from_str(
        std::str::from_utf8(&raw)
            .map_err(|e| PipelineError::Parse(format!("{}: {e}", path.display())))?,
    )
    .map_err(|e| PipelineError::Config(format!("{}: {e}", path.display())))?;

    let base = path.parent().unwrap_or_else(|| Path::new("."));
    for p in [
        &mut config.data.train_feed,
        &mut config.data.test_feed,
        &mut config.artifacts_dir,
    ] {
        if p.is_relative() {
            *p = base.join(&p);
        }
    }
    config.validate()?;
    Ok(Run { config, config_hash: hex(&Sha256::digest(&raw)) })
}

// ---------------------------------------------------------------------------
// Run directories and file helpers

fn run_dir_name(hash: &str, index: usize) -> String {
    format!("{}-r{index:04}", &hash[..8])
}

fn run_indices(artifacts: &Path, hash: &str) -> Result<Vec<usize>, PipelineError> {
    let prefix = format!("{}-r", &hash[..8]);
    let mut indices = Vec::new();
    if artifacts.is_dir() {
        let entries = fs::read_dir(artifacts).map_err(|e| PipelineError::io(artifacts, e))?;
        for entry in entries {
            let entry = entry.map_err(|e| PipelineError::io(artifacts, e))?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if let Some(rest) = name.strip_prefix(&prefix) {
                if let Ok(i) = rest.parse::<usize>() {
                    indices.push(i);
                }
            }
        }
    }
    indices.sort_unstable();
    Ok(indices)
}

/// Creates the next run directory for this config.
pub fn create_run_dir(run: &Run) -> Result<PathBuf, PipelineError> {
    let artifacts = &run.config.artifacts_dir;
    let next = run_indices(artifacts, &run.config_hash)?.last().map_or(1, |i| i + 1);
    let dir = artifacts.join(run_dir_name(&run.config_hash, next));
    fs::create_dir_all(&dir).map_err(|e| PipelineError::io(&dir, e))?;
    Ok(dir)
}

/// Finds the most recent run directory for this config.
pub fn latest_run_dir(run: &Run) -> Result<PathBuf, PipelineError> {
    let artifacts = &run.config.artifacts_dir;
    match run_indices(artifacts, &run.config_hash)?.last() {
        Some(&i) => Ok(artifacts.join(run_dir_name(&run.config_hash, i))),
        None => Err(PipelineError::Config(format!(
            "no run directory for config {} under {}; run `ingest` first",
            &run.config_hash[..8],
            artifacts.display()
        ))),
    }
}

fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), PipelineError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| PipelineError::io(parent, e))?;
    }
    fs::write(path, bytes).map_err(|e| PipelineError::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T, pretty: bool) -> Result<(), PipelineError> {
    let body = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| PipelineError::Numeric(format!("serializing {}: {e}", path.display())))?;
    write_bytes(path, body.as_bytes())
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, PipelineError> {
    let body = fs::read_to_string(path).map_err(|e| PipelineError::io(path, e))?;
    serde_json::from_str(&body)
        .map_err(|e| PipelineError::Parse(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------------------
// Artifacts

/// Everything ingest derives from the feeds, cached for later stages.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TokenCache {
    pub config_hash: String,
    pub q_max: i64,
    pub train: EncodedFlow,
    pub test: EncodedFlow,
    /// Raw test events, kept for replaying the real series at evaluation.
    pub test_events: Vec<OrderEvent>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RunManifest {
    config_hash: String,
    q_max: i64,
    vocab_size: usize,
    tick_size: f64,
    slice_len: usize,
    seq_len: usize,
    pair_count: usize,
    train_events: usize,
    test_events: usize,
    train_span: (f64, f64),
    test_span: (f64, f64),
    train_counters: EncodeCounters,
    test_counters: EncodeCounters,
}

/// Serialized RNG position: enough to continue a ChaCha stream exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RngState {
    pub seed: [u8; 32],
    pub stream: u64,
    pub word_pos: u128,
}

impl RngState {
    fn capture(rng: &ChaCha8Rng) -> Self {
        RngState { seed: rng.get_seed(), stream: rng.get_stream(), word_pos: rng.get_word_pos() }
    }

    fn restore(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::from_seed(self.seed);
        rng.set_stream(self.stream);
        rng.set_word_pos(self.word_pos);
        rng
    }
}

/// A full training snapshot: parameters, optimizer state, RNG position, and
/// metric history. Training resumed from a checkpoint continues the exact
/// trajectory of an uninterrupted run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Checkpoint {
    pub config_hash: String,
    pub seed: u64,
    /// Completed adversarial rounds (0 = pretraining only).
    pub round: usize,
    pub gen: GeneratorParams,
    pub disc: DiscriminatorParams,
    pub gen_opt: Adam,
    pub disc_opt: Adam,
    pub rng: RngState,
    pub mle_history: Vec<f64>,
    pub disc_pretrain: DiscMetrics,
    pub rounds: Vec<RoundMetrics>,
}

fn checkpoint_path(run_dir: &Path, round: usize) -> PathBuf {
    run_dir.join("checkpoints").join(format!("round_{round:04}.json"))
}

/// The highest-round checkpoint in the run directory, if any.
pub fn latest_checkpoint(run_dir: &Path) -> Result<Option<Checkpoint>, PipelineError> {
    let dir = run_dir.join("checkpoints");
    if !dir.is_dir() {
        return Ok(None);
    }
    let mut best: Option<usize> = None;
    let entries = fs::read_dir(&dir).map_err(|e| PipelineError::io(&dir, e))?;
    for entry in entries {
        let entry = entry.map_err(|e| PipelineError::io(&dir, e))?;
        let name = entry.file_name().to_string_lossy().into_owned();
        if let Some(num) = name.strip_prefix("round_").and_then(|s| s.strip_suffix(".json")) {
            if let Ok(i) = num.parse::<usize>() {
                best = Some(best.map_or(i, |b: usize| b.max(i)));
            }
        }
    }
    match best {
        Some(round) => Ok(Some(read_json(&checkpoint_path(run_dir, round))?)),
        None => Ok(None),
    }
}

fn cache_path(run_dir: &Path) -> PathBuf {
    run_dir.join("token_cache.json")
}

fn load_cache(run: &Run, run_dir: &Path) -> Result<TokenCache, PipelineError> {
    let cache: TokenCache = read_json(&cache_path(run_dir))?;
    if cache.config_hash != run.config_hash {
        return Err(PipelineError::Config(format!(
            "cache in {} was built by config {}, current is {}",
            run_dir.display(),
            &cache.config_hash[..8],
            &run.config_hash[..8]
        )));
    }
    Ok(cache)
}

// ---------------------------------------------------------------------------
// Commands

#[derive(Clone, Debug)]
pub struct IngestSummary {
    pub run_dir: PathBuf,
    pub pair_count: usize,
    pub train_events: usize,
    pub test_events: usize,
}

/// Parses both feeds, encodes them into tokens, checks the train/test windows
/// are disjoint in time, and writes the token cache plus run manifest.
pub fn cmd_ingest(run: &Run, run_dir: &Path) -> Result<IngestSummary, PipelineError> {
    let cfg = &run.config;
    let format = cfg.feed_format()?;
    let vocab = Vocabulary::new(cfg.data.q_max)?;

    let parse = |path: &Path| -> Result<Vec<OrderEvent>, PipelineError> {
        parse_feed(path, format, cfg.data.tick_size).map_err(|e| match e {
            IngestError::Io(source) => PipelineError::io(path, source),
            other => {
                PipelineError::from(other).prefix_parse(&path.display().to_string())
            }
        })
    };
    let train_events = parse(&cfg.data.train_feed)?;
    let test_events = parse(&cfg.data.test_feed)?;

    let span = |events: &[OrderEvent]| (events[0].time, events[events.len() - 1].time);
    let (train_span, test_span) = (span(&train_events), span(&test_events));
    if train_span.1 >= test_span.0 && test_span.1 >= train_span.0 {
        return Err(PipelineError::Config(format!(
            "train window [{}, {}] overlaps test window [{}, {}]",
            train_span.0, train_span.1, test_span.0, test_span.1
        )));
    }

    let train = encode_flow(&train_events, &BookState::new(), &vocab);
    let test = encode_flow(&test_events, &BookState::new(), &vocab);
    let pairs = slice_flow(&train.tokens, cfg.data.slice_len)?;
    if pairs.is_empty() {
        return Err(PipelineError::Config(format!(
            "train feed yields no training windows at slice_len {}",
            cfg.data.slice_len
        )));
    }

    let manifest = RunManifest {
        config_hash: run.config_hash.clone(),
        q_max: cfg.data.q_max,
        vocab_size: vocab.size(),
        tick_size: cfg.data.tick_size,
        slice_len: cfg.data.slice_len,
        seq_len: cfg.seq_len(),
        pair_count: pairs.len(),
        train_events: train_events.len(),
        test_events: test_events.len(),
        train_span,
        test_span,
        train_counters: train.counters,
        test_counters: test.counters,
    };
    write_json(&run_dir.join("manifest.json"), &manifest, true)?;

    let cache = TokenCache {
        config_hash: run.config_hash.clone(),
        q_max: cfg.data.q_max,
        train,
        test,
        test_events,
    };
    write_json(&cache_path(run_dir), &cache, false)?;

    Ok(IngestSummary {
        run_dir: run_dir.to_path_buf(),
        pair_count: manifest.pair_count,
        train_events: manifest.train_events,
        test_events: manifest.test_events,
    })
}

/// Fits the per-token arrival-rate benchmark on the training flow.
pub fn cmd_fit_benchmark(run: &Run, run_dir: &Path) -> Result<PathBuf, PipelineError> {
    let cache = load_cache(run, run_dir)?;
    let vocab = Vocabulary::new(cache.q_max)?;
    let times = &cache.train.times;
    if times.len() < 2 {
        return Err(PipelineError::Config("train flow too short to fit rates".into()));
    }
    let duration = times[times.len() - 1] - times[0];
    let rates = PoissonRates::fit(&cache.train.tokens, duration, &vocab)?;
    let path = run_dir.join("rates.json");
    rates.save(&path)?;
    Ok(path)
}

#[derive(Clone, Debug)]
pub struct TrainSummary {
    pub rounds_done: usize,
    pub checkpoint: PathBuf,
    pub final_heldout_nll: Option<f64>,
}

struct TrainState {
    gen: GeneratorParams,
    disc: DiscriminatorParams,
    gen_opt: Adam,
    disc_opt: Adam,
    rng: ChaCha8Rng,
    round: usize,
    mle_history: Vec<f64>,
    disc_pretrain: DiscMetrics,
    rounds: Vec<RoundMetrics>,
}

impl TrainState {
    fn checkpoint(&self, run: &Run, seed: u64) -> Checkpoint {
        Checkpoint {
            config_hash: run.config_hash.clone(),
            seed,
            round: self.round,
            gen: self.gen.clone(),
            disc: self.disc.clone(),
            gen_opt: self.gen_opt.clone(),
            disc_opt: self.disc_opt.clone(),
            rng: RngState::capture(&self.rng),
            mle_history: self.mle_history.clone(),
            disc_pretrain: self.disc_pretrain.clone(),
            rounds: self.rounds.clone(),
        }
    }

    fn from_checkpoint(c: Checkpoint) -> Self {
        TrainState {
            gen: c.gen,
            disc: c.disc,
            gen_opt: c.gen_opt,
            disc_opt: c.disc_opt,
            rng: c.rng.restore(),
            round: c.round,
            mle_history: c.mle_history,
            disc_pretrain: c.disc_pretrain,
            rounds: c.rounds,
        }
    }
}

/// Pretrains (maximum likelihood, then the discriminator) and runs the
/// adversarial rounds, checkpointing after pretraining and after every round.
/// With `resume`, continues from the latest checkpoint instead of starting
/// over; `stop_after` bounds how many adversarial rounds this invocation
/// performs.
pub fn cmd_train(
    run: &Run,
    run_dir: &Path,
    seed: u64,
    resume: bool,
    stop_after: Option<usize>,
) -> Result<TrainSummary, PipelineError> {
    let cfg = &run.config;
    let cache = load_cache(run, run_dir)?;
    let vocab = Vocabulary::new(cache.q_max)?;
    let pairs = slice_flow(&cache.train.tokens, cfg.data.slice_len)?;
    let t_cfg = cfg.train_config();
    let m_cfg = &cfg.model;

    let mut state = match (resume, latest_checkpoint(run_dir)?) {
        (true, Some(ckpt)) => {
            if ckpt.config_hash != run.config_hash {
                return Err(PipelineError::Config(
                    "checkpoint belongs to a different config".into(),
                ));
            }
            if ckpt.seed != seed {
                return Err(PipelineError::Config(format!(
                    "checkpoint was trained with seed {}, not {seed}",
                    ckpt.seed
                )));
            }
            TrainState::from_checkpoint(ckpt)
        }
        (true, None) => {
            return Err(PipelineError::Config("no checkpoint to resume from".into()))
        }
        (false, _) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut gen =
                GeneratorParams::init(vocab.size(), m_cfg.d_emb, m_cfg.hidden, &mut rng);
            let mut disc = DiscriminatorParams::init(
                vocab.size(),
                m_cfg.d_emb,
                &m_cfg.filter_widths,
                m_cfg.filters_per_width,
                &mut rng,
            );
            let mut gen_opt = Adam::new(AdamConfig::with_lr(t_cfg.lr_gen, t_cfg.clip_norm));
            let mut disc_opt = Adam::new(AdamConfig::with_lr(t_cfg.lr_disc, t_cfg.clip_norm));

            let mle_history =
                pretrain_generator_mle(&mut gen, &mut gen_opt, &pairs, &t_cfg, &mut rng)?;

            let fakes = pairs
                .iter()
                .map(|p| generate(&gen, &p.start, t_cfg.seq_len, &mut rng))
                .collect::<Result<Vec<_>, _>>()?;
            let reals: Vec<Vec<usize>> = pairs.iter().map(|p| p.real.clone()).collect();
            let disc_pretrain = pretrain_discriminator(
                &mut disc,
                &mut disc_opt,
                &reals,
                &fakes,
                t_cfg.d_epochs,
                t_cfg.batch_size,
                &mut rng,
            )?;

            let state = TrainState {
                gen,
                disc,
                gen_opt,
                disc_opt,
                rng,
                round: 0,
                mle_history,
                disc_pretrain,
                rounds: Vec::new(),
            };
            write_json(&checkpoint_path(run_dir, 0), &state.checkpoint(run, seed), false)?;
            state
        }
    };

    let target = match stop_after {
        Some(n) => t_cfg.rounds.min(state.round + n),
        None => t_cfg.rounds,
    };
    while state.round < target {
        let mut one = t_cfg.clone();
        one.rounds = 1;
        let mut metrics = adversarial_train(
            &mut state.gen,
            &mut state.disc,
            &mut state.gen_opt,
            &mut state.disc_opt,
            &pairs,
            &one,
            &mut state.rng,
        )?;
        let mut round = metrics.pop().expect("one round requested");
        round.round = state.round;
        state.rounds.push(round);
        state.round += 1;
        write_json(
            &checkpoint_path(run_dir, state.round),
            &state.checkpoint(run, seed),
            false,
        )?;
    }

    let mut mle_csv = String::from("epoch,heldout_nll\n");
    for (i, nll) in state.mle_history.iter().enumerate() {
        mle_csv.push_str(&format!("{i},{nll}\n"));
    }
    write_bytes(&run_dir.join("mle_history.csv"), mle_csv.as_bytes())?;

    let mut rounds_csv =
        String::from("round,mean_action_value,mean_terminal_score,disc_accuracy,heldout_nll\n");
    for r in &state.rounds {
        rounds_csv.push_str(&format!(
            "{},{},{},{},{}\n",
            r.round,
            r.generator.mean_action_value,
            r.generator.mean_terminal_score,
            r.discriminator.accuracy,
            r.heldout_nll
        ));
    }
    write_bytes(&run_dir.join("rounds_history.csv"), rounds_csv.as_bytes())?;

    Ok(TrainSummary {
        rounds_done: state.round,
        checkpoint: checkpoint_path(run_dir, state.round),
        final_heldout_nll: state.rounds.last().map(|r| r.heldout_nll).or_else(|| {
            state.mle_history.last().copied()
        }),
    })
}

/// Which flow model a simulation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Generator,
    Poisson,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::Generator => "generator",
            ModelKind::Poisson => "poisson",
        }
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generator" => Ok(ModelKind::Generator),
            "poisson" => Ok(ModelKind::Poisson),
            other => Err(format!("unknown model '{other}' (expected generator|poisson)")),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct SimManifest {
    config_hash: String,
    model: String,
    seed: u64,
    n_paths: usize,
    horizon: f64,
    sample_step: f64,
    starts_source: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SimSummary {
    pub dir: PathBuf,
    pub n_paths: usize,
    pub total_events: usize,
}

fn sim_dir(run_dir: &Path, kind: ModelKind) -> PathBuf {
    run_dir.join(format!("sim-{}", kind.as_str()))
}

/// Simulates `n_paths` mid-price paths with the chosen model and writes the
/// per-path grid CSVs plus a combined JSON the evaluator consumes.
pub fn cmd_simulate(
    run: &Run,
    run_dir: &Path,
    seed: u64,
    kind: ModelKind,
) -> Result<SimSummary, PipelineError> {
    let cfg = &run.config;
    let cache = load_cache(run, run_dir)?;
    let vocab = Vocabulary::new(cache.q_max)?;
    let sizes = EmpiricalSampler::fit(&cache.train.sizes)?;
    let gaps = EmpiricalSampler::fit(&interarrival_gaps(&cache.train.times))?;
    let initial_book = &cache.train.final_book;
    if initial_book.best_bid().is_none() || initial_book.best_ask().is_none() {
        return Err(PipelineError::Config(
            "the training feed leaves a one-sided book; cannot seed simulations".into(),
        ));
    }

    let spec = SimSpec {
        vocab: &vocab,
        initial_book,
        tick_size: cfg.data.tick_size,
        horizon: cfg.sim.horizon,
        n_paths: cfg.sim.n_paths,
        sizes: &sizes,
        gaps: &gaps,
        sample_step: cfg.sim.sample_step,
        max_events: cfg.sim.max_events,
    };

    let mut starts_source = None;
    let paths = match kind {
        ModelKind::Generator => {
            let ckpt = latest_checkpoint(run_dir)?.ok_or_else(|| {
                PipelineError::Config("no checkpoint in run directory; run `train` first".into())
            })?;
            let (starts, source): (Vec<Vec<usize>>, &str) =
                match slice_flow(&cache.test.tokens, cfg.data.slice_len) {
                    Ok(test_pairs) if !test_pairs.is_empty() => {
                        (test_pairs.into_iter().map(|p| p.start).collect(), "test")
                    }
                    _ => {
                        let train_pairs = slice_flow(&cache.train.tokens, cfg.data.slice_len)?;
                        (train_pairs.into_iter().map(|p| p.start).collect(), "train")
                    }
                };
            starts_source = Some(source.to_string());
            let model = FlowModel::Generator {
                params: &ckpt.gen,
                starts: &starts,
                seq_len: cfg.seq_len(),
            };
            run_paths(&model, &spec, seed)?
        }
        ModelKind::Poisson => {
            let rates = PoissonRates::load(&run_dir.join("rates.json"))?;
            run_paths(&FlowModel::Poisson(&rates), &spec, seed)?
        }
    };

    let dir = sim_dir(run_dir, kind);
    let manifest = SimManifest {
        config_hash: run.config_hash.clone(),
        model: kind.as_str().to_string(),
        seed,
        n_paths: paths.len(),
        horizon: cfg.sim.horizon,
        sample_step: cfg.sim.sample_step,
        starts_source,
    };
    write_json(&dir.join("manifest.json"), &manifest, true)?;
    write_json(&dir.join("paths.json"), &paths, false)?;
    for (i, path) in paths.iter().enumerate() {
        let mut csv = String::from("time,mid\n");
        for (k, mid) in path.grid.iter().enumerate() {
            csv.push_str(&format!("{},{mid}\n", k as f64 * cfg.sim.sample_step));
        }
        write_bytes(&dir.join(format!("path_{i:04}.csv")), csv.as_bytes())?;
    }

    let total_events = paths.iter().map(|p| p.counters.events).sum();
    Ok(SimSummary { dir, n_paths: paths.len(), total_events })
}

#[derive(Clone, Debug)]
pub struct EvalSummary {
    pub report_json: PathBuf,
    pub report_txt: PathBuf,
    pub models: Vec<String>,
}

/// Replays the test feed into the real mid-price series and compares every
/// simulated model found in the run directory against it.
pub fn cmd_evaluate(run: &Run, run_dir: &Path) -> Result<EvalSummary, PipelineError> {
    let cfg = &run.config;
    let cache = load_cache(run, run_dir)?;
    let mut book = BookState::new();
    let rr = replay(&mut book, &cache.test_events, cfg.data.tick_size, 0.0)?;
    if rr.series.is_empty() {
        return Err(PipelineError::Numeric(
            "the test feed never quotes both sides; no real mid-price series".into(),
        ));
    }
    let grid_start = rr.series.times[0];
    let step = cfg.sim.sample_step;
    let n_steps = (cfg.sim.horizon / step).floor() as usize;
    let last_time = cache.test_events.last().map(|e| e.time).unwrap_or(grid_start);
    let needed = grid_start + n_steps as f64 * step;
    if last_time < needed {
        return Err(PipelineError::Config(format!(
            "test feed ends at t = {last_time} but the evaluation grid needs t = {needed}"
        )));
    }
    let real_grid = resample_locf(&rr.series, grid_start, step, n_steps)?;
    let real_trades: Vec<f64> = rr.trade_times.iter().map(|t| t - grid_start).collect();

    let mut models: Vec<(String, Vec<PathResult>)> = Vec::new();
    for kind in [ModelKind::Generator, ModelKind::Poisson] {
        let path = sim_dir(run_dir, kind).join("paths.json");
        if path.is_file() {
            models.push((kind.as_str().to_string(), read_json(&path)?));
        }
    }
    if models.is_empty() {
        return Err(PipelineError::Config(
            "no simulated paths in run directory; run `simulate` first".into(),
        ));
    }
    let model_refs: Vec<(String, &[PathResult])> =
        models.iter().map(|(name, paths)| (name.clone(), paths.as_slice())).collect();

    let report = build_report(&real_grid, &real_trades, &model_refs, &cfg.eval_config()?)?;

    let eval_dir = run_dir.join("eval");
    write_json(
        &eval_dir.join("manifest.json"),
        &serde_json::json!({ "config_hash": run.config_hash }),
        true,
    )?;
    let report_json = eval_dir.join("report.json");
    write_json(&report_json, &report, true)?;
    let report_txt = eval_dir.join("report.txt");
    write_bytes(&report_txt, report.to_text().as_bytes())?;
    for (name, body) in report.csv_tables() {
        write_bytes(&eval_dir.join(format!("{name}.csv")), body.as_bytes())?;
    }

    Ok(EvalSummary {
        report_json,
        report_txt,
        models: models.into_iter().map(|(n, _)| n).collect(),
    })
}

/// Loads the written report and renders its tables.
pub fn cmd_report(run_dir: &Path) -> Result<String, PipelineError> {
    let path = run_dir.join("eval").join("report.json");
    if !path.is_file() {
        return Err(PipelineError::Config(format!(
            "no report at {}; run `evaluate` first",
            path.display()
        )));
    }
    let report: EvalReport = read_json(&path)?;
    Ok(report.to_text())
}
