//! Command-line front end for betamorph-core: argument grammar, report
//! formats and batch execution.

pub mod args;
pub mod commands;
pub mod document;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use args::{Command, Options};
use document::Document;

/// β specs from a list file: one per line, blank lines and `#` comments skipped.
pub fn read_beta_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

/// Runs `command` for every spec on a pool of worker threads; results keep input order.
pub fn run_batch(command: &Command, specs: &[String], options: &Options) -> Vec<Document> {
    let workers = thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(specs.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Document>>> = specs.iter().map(|_| Mutex::new(None)).collect();
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= specs.len() {
                    break;
                }
                let doc = commands::run(command, &specs[i], options);
                *slots[i].lock().expect("slot lock") = Some(doc);
            });
        }
    });
    slots.into_iter().map(|m| m.into_inner().expect("slot lock").expect("every slot filled")).collect()
}
