use chrono::Utc;
use scraper::{ElementRef, Html, Selector};
use serde::{Deserialize, Serialize};

use super::{is_absolute_url, IngestError, ResultSet, SearchResult, Source};

/// CSS selectors describing where results live in a page.
///
/// `result_selector` is matched against the whole document and must select
/// organic result blocks only; the other three are matched inside each
/// block. The url element's `href` is used when present, its text otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionRules {
    pub result_selector: String,
    pub title_path: String,
    pub url_path: String,
    pub snippet_path: String,
}

impl Default for ExtractionRules {
    fn default() -> Self {
        Self {
            result_selector: "div.g".into(),
            title_path: "h3".into(),
            url_path: "a[href]".into(),
            snippet_path: "div.VwiC3b".into(),
        }
    }
}

impl ExtractionRules {
    pub fn from_json(text: &str) -> Result<Self, IngestError> {
        let rules: Self =
            serde_json::from_str(text).map_err(|e| IngestError::InvalidRules(format!("rules file: {e}")))?;
        rules.compile()?;
        Ok(rules)
    }

    fn compile(&self) -> Result<CompiledRules, IngestError> {
        let sel = |name: &str, pattern: &str| {
            if pattern.trim().is_empty() {
                return Err(IngestError::InvalidRules(format!("{name} is empty")));
            }
            Selector::parse(pattern).map_err(|e| IngestError::InvalidRules(format!("{name} {pattern:?}: {e}")))
        };
        Ok(CompiledRules {
            result: sel("result_selector", &self.result_selector)?,
            title: sel("title_path", &self.title_path)?,
            url: sel("url_path", &self.url_path)?,
            snippet: sel("snippet_path", &self.snippet_path)?,
        })
    }
}

struct CompiledRules {
    result: Selector,
    title: Selector,
    url: Selector,
    snippet: Selector,
}

/// A result block that was dropped during extraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractionWarning {
    /// 0-based position of the block among all `result_selector` matches.
    pub block: usize,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct ParsedSerp {
    pub result_set: ResultSet,
    pub warnings: Vec<ExtractionWarning>,
}

/// Extracts ranked results from a results page.
///
/// Blocks missing a title or an absolute url are skipped and reported;
/// surviving blocks are ranked 1..n in document order.
pub fn parse_serp(html: &str, rules: &ExtractionRules, query: &str) -> Result<ParsedSerp, IngestError> {
    if query.trim().is_empty() {
        return Err(IngestError::EmptyQuery);
    }
    let compiled = rules.compile()?;
    let doc = Html::parse_document(html);

    let mut results = Vec::new();
    let mut warnings = Vec::new();
    let mut matched = 0usize;
    for (block, node) in doc.select(&compiled.result).enumerate() {
        matched += 1;
        let title = node.select(&compiled.title).next().map(text_of).unwrap_or_default();
        if title.is_empty() {
            warnings.push(ExtractionWarning {
                block,
                reason: "missing title".into(),
            });
            continue;
        }
        let url = node
            .select(&compiled.url)
            .next()
            .map(|el| {
                el.value()
                    .attr("href")
                    .map_or_else(|| text_of(el), |h| h.trim().to_string())
            })
            .unwrap_or_default();
        if url.is_empty() {
            warnings.push(ExtractionWarning {
                block,
                reason: "missing url".into(),
            });
            continue;
        }
        if !is_absolute_url(&url) {
            warnings.push(ExtractionWarning {
                block,
                reason: format!("url {url:?} is not absolute"),
            });
            continue;
        }
        let snippet = node.select(&compiled.snippet).next().map(text_of).unwrap_or_default();
        results.push(SearchResult {
            rank: results.len() as u32 + 1,
            title,
            url,
            snippet,
        });
    }

    if matched == 0 && has_content(&doc) {
        return Err(IngestError::Extraction(format!(
            "result_selector {:?} matched nothing in a non-empty document",
            rules.result_selector
        )));
    }

    let result_set = ResultSet::new(query, results, Source::Live, Utc::now())?;
    Ok(ParsedSerp { result_set, warnings })
}

fn text_of(el: ElementRef<'_>) -> String {
    el.text().flat_map(str::split_whitespace).collect::<Vec<_>>().join(" ")
}

fn has_content(doc: &Html) -> bool {
    doc.root_element()
        .descendants()
        .filter_map(ElementRef::wrap)
        .any(|el| !matches!(el.value().name(), "html" | "head" | "body"))
        || doc.root_element().text().any(|t| !t.trim().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules() -> ExtractionRules {
        ExtractionRules {
            result_selector: "div.result".into(),
            title_path: "h3".into(),
            url_path: "a".into(),
            snippet_path: "p.snippet".into(),
        }
    }

    const PAGE: &str = r#"<!doctype html>
<html><body>
  <div class="ad"><h3>Sponsored</h3><a href="https://ads.example/">ad</a></div>
  <div class="result">
    <a href="https://www.qu.edu.qa/"><h3>Qatar University</h3></a>
    <p class="snippet">Qatar University is a national
       institution of higher education.</p>
  </div>
  <div class="result">
    <a href="https://www.hbku.edu.qa/"><h3>Hamad Bin Khalifa University</h3></a>
    <p class="snippet">Research university in Education City.</p>
  </div>
  <div class="result">
    <a href="https://en.wikipedia.org/wiki/Qatar_University"><h3>Qatar University - Wikipedia</h3></a>
  </div>
</body></html>"#;

    #[test]
    fn three_blocks_in_document_order() {
        let parsed = parse_serp(PAGE, &rules(), "qatar university").unwrap();
        let rs = &parsed.result_set;
        assert_eq!(rs.len(), 3);
        assert!(parsed.warnings.is_empty());
        let titles: Vec<&str> = rs.results.iter().map(|r| r.title.as_str()).collect();
        assert_eq!(
            titles,
            [
                "Qatar University",
                "Hamad Bin Khalifa University",
                "Qatar University - Wikipedia"
            ]
        );
        assert_eq!(rs.results[0].url, "https://www.qu.edu.qa/");
        assert_eq!(
            rs.results[0].snippet,
            "Qatar University is a national institution of higher education."
        );
        assert_eq!(rs.results[2].snippet, "");
        assert_eq!(rs.results.iter().map(|r| r.rank).collect::<Vec<_>>(), [1, 2, 3]);
    }

    #[test]
    fn block_without_url_is_skipped_with_warning() {
        let page = PAGE.replace(
            r#"<a href="https://www.hbku.edu.qa/"><h3>Hamad Bin Khalifa University</h3></a>"#,
            "<h3>Hamad Bin Khalifa University</h3>",
        );
        assert_ne!(page, PAGE);
        let parsed = parse_serp(&page, &rules(), "qatar university").unwrap();
        assert_eq!(parsed.result_set.len(), 2);
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.warnings[0].block, 1);
        assert_eq!(parsed.result_set.results[1].rank, 2);
    }

    #[test]
    fn empty_document_yields_no_results() {
        let parsed = parse_serp("", &rules(), "q").unwrap();
        assert!(parsed.result_set.is_empty());
        assert!(parsed.warnings.is_empty());
    }

    #[test]
    fn wrong_selector_on_real_page_is_an_error() {
        let mut r = rules();
        r.result_selector = "li.nothing-here".into();
        let err = parse_serp(PAGE, &r, "q").unwrap_err();
        assert!(matches!(err, IngestError::Extraction(_)));
    }

    #[test]
    fn parsing_is_deterministic() {
        let a = parse_serp(PAGE, &rules(), "q").unwrap().result_set.results;
        let b = parse_serp(PAGE, &rules(), "q").unwrap().result_set.results;
        assert_eq!(a, b);
    }

    #[test]
    fn rules_reject_empty_and_malformed_patterns() {
        let mut r = rules();
        r.title_path = "  ".into();
        assert!(matches!(parse_serp("", &r, "q"), Err(IngestError::InvalidRules(_))));
        let err = ExtractionRules::from_json(
            r#"{"result_selector":"div[","title_path":"h3","url_path":"a","snippet_path":"p"}"#,
        )
        .unwrap_err();
        assert!(matches!(err, IngestError::InvalidRules(_)));
    }
}
