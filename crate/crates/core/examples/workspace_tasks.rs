// Loading a workspace file and running tasks over it.

use cocohopf::tasks::{parse_tasks, render_text, run_tasks};
use cocohopf::workspace::parse_workspace;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ws = parse_workspace(include_str!("../fixtures/tutorial.hopf"))?;
    println!("{} declarations", ws.entries().len());
    let args: Vec<String> = "--task classifier --algebra KC3 --task center --algebra KS3 --task functor-q --algebra Sign"
        .split_whitespace()
        .map(String::from)
        .collect();
    let reports = run_tasks(&ws, &parse_tasks(&args)?, ws.degree);
    print!("{}", render_text(&reports));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
