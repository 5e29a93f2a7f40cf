//! Parameter grammar.
//!
//! ```text
//! params := "B(" int ";" list ";" list ";" list ")"
//!         | "GP(" int "," int ")"
//!         | "I(" int "," int "," int ")"
//!         | "H(" int ";" list ")"
//! list   := "_" | int ("," int)*
//! ```
//!
//! Whitespace is ignored everywhere. Positions are 0-based character
//! offsets into the input.

use thiserror::Error;

use crate::params::{make_params, BicirculantParams, ParamsError, RimSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid parameters at position {position}: {source}")]
    Semantic {
        position: usize,
        source: ParamsError,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::Semantic { position, .. } => {
                *position
            }
        }
    }
}

struct Parser {
    chars: Vec<char>,
    at: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|c| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).copied()
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.at,
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            Some(c) => self.fail(format!("expected '{want}', found '{c}'")),
            None => self.fail(format!("expected '{want}', found end of input")),
        }
    }

    fn name(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.at;
        while self
            .chars
            .get(self.at)
            .is_some_and(|c| c.is_ascii_alphabetic())
        {
            self.at += 1;
        }
        if start == self.at {
            return self.fail("expected B, GP, I or H");
        }
        Ok(self.chars[start..self.at]
            .iter()
            .collect::<String>()
            .to_ascii_uppercase())
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.at;
        if self.chars.get(self.at) == Some(&'-') {
            self.at += 1;
        }
        while self.chars.get(self.at).is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        let text: String = self.chars[start..self.at].iter().collect();
        text.parse().or_else(|_| {
            self.at = start;
            self.fail("expected an integer")
        })
    }

    fn order(&mut self) -> Result<(usize, usize), ParseError> {
        self.skip_ws();
        let pos = self.at;
        let m = self.int()?;
        if m < 1 {
            self.at = pos;
            return self.fail("m must be a positive integer");
        }
        Ok((m as usize, pos))
    }

    /// A residue list and the position where it starts.
    fn list(&mut self) -> Result<(Vec<i64>, usize), ParseError> {
        self.skip_ws();
        let pos = self.at;
        if self.peek() == Some('_') {
            self.at += 1;
            return Ok((Vec::new(), pos));
        }
        let mut out = vec![self.int()?];
        while self.peek() == Some(',') {
            self.at += 1;
            out.push(self.int()?);
        }
        Ok((out, pos))
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.fail(format!("unexpected '{c}' after the closing parenthesis")),
        }
    }
}

/// Parses `B(..)`, `GP(..)`, `I(..)` or `H(..)`.
pub fn parse_params(text: &str) -> Result<BicirculantParams, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        at: 0,
    };
    let name_pos = {
        p.skip_ws();
        p.at
    };
    let name = p.name()?;
    p.expect('(')?;
    let (m, m_pos) = p.order()?;
    let semantic =
        |position: usize| move |source: ParamsError| ParseError::Semantic { position, source };
    let result = match name.as_str() {
        "B" => {
            p.expect(';')?;
            let (r, r_pos) = p.list()?;
            p.expect(';')?;
            let (s, s_pos) = p.list()?;
            p.expect(';')?;
            let (t, t_pos) = p.list()?;
            p.expect(')')?;
            make_params(m, &r, &s, &t).map_err(|e| {
                let position = match &e {
                    ParamsError::ZeroOrder => m_pos,
                    ParamsError::NonSymmetricRimSet { set, .. }
                    | ParamsError::ZeroInRim { set } => match set {
                        RimSet::Outer => r_pos,
                        RimSet::Inner => t_pos,
                    },
                    ParamsError::UnequalRimSizes { .. } => t_pos,
                    _ => s_pos,
                };
                ParseError::Semantic {
                    position,
                    source: e,
                }
            })
        }
        "GP" => {
            p.expect(',')?;
            p.skip_ws();
            let k_pos = p.at;
            let k = p.int()?;
            p.expect(')')?;
            let m_i = m as i64;
            make_params(m, &[1, m_i - 1], &[0], &[k, -k]).map_err(semantic(k_pos))
        }
        "I" => {
            p.expect(',')?;
            p.skip_ws();
            let j_pos = p.at;
            let j = p.int()?;
            p.expect(',')?;
            p.skip_ws();
            let k_pos = p.at;
            let k = p.int()?;
            p.expect(')')?;
            make_params(m, &[j, -j], &[0], &[k, -k]).map_err(|e| {
                let position = match &e {
                    ParamsError::ZeroInRim { set: RimSet::Outer } => j_pos,
                    _ => k_pos,
                };
                ParseError::Semantic {
                    position,
                    source: e,
                }
            })
        }
        "H" => {
            p.expect(';')?;
            let (s, s_pos) = p.list()?;
            p.expect(')')?;
            make_params(m, &[], &s, &[]).map_err(semantic(s_pos))
        }
        _ => {
            return Err(ParseError::Syntax {
                position: name_pos,
                message: format!("unknown family {name}"),
            });
        }
    }?;
    p.end()?;
    Ok(result)
}

/// Canonical text form, accepted by [`parse_params`].
pub fn render_params(p: &BicirculantParams) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::generalized_petersen;
    use proptest::prelude::*;

    #[test]
    fn sugar() {
        assert_eq!(
            parse_params("GP(5,2)").unwrap(),
            generalized_petersen(5, 2).unwrap()
        );
        assert_eq!(
            render_params(&parse_params("H(6; 0,2)").unwrap()),
            "B(6; _; 0,2; _)"
        );
        assert_eq!(
            parse_params("I(11, 3, 5)").unwrap(),
            make_params(11, &[3, 8], &[0], &[5, 6]).unwrap()
        );
    }

    #[test]
    fn whitespace_and_negatives() {
        let p = parse_params("  B ( 12 ;1, -1; 0,4 ,8 ; 2,10 ) ").unwrap();
        assert_eq!(render_params(&p), "B(12; 1,11; 0,4,8; 2,10)");
        assert_eq!(parse_params("B(1;_;0;_)").unwrap().order(), 2);
    }

    #[test]
    fn semantic_positions() {
        let e = parse_params("B(6; 1; 0; 1)").unwrap_err();
        assert!(matches!(
            e,
            ParseError::Semantic {
                source: ParamsError::NonSymmetricRimSet {
                    set: RimSet::Outer,
                    ..
                },
                ..
            }
        ));
        assert_eq!(e.position(), 5);
        let e = parse_params("B(6; 1,5; 0; 1)").unwrap_err();
        assert_eq!(e.position(), 13);
        let e = parse_params("B(6; 1,5; 1; 1,5)").unwrap_err();
        assert!(matches!(
            e,
            ParseError::Semantic {
                source: ParamsError::MissingZeroSpoke,
                position: 10
            }
        ));
    }

    #[test]
    fn syntax_positions() {
        assert_eq!(parse_params("B(6; 1,5 0; 1,5)").unwrap_err().position(), 9);
        assert_eq!(parse_params("Q(6)").unwrap_err().position(), 0);
        assert_eq!(parse_params("B(0; _; 0; _)").unwrap_err().position(), 2);
        assert_eq!(parse_params("GP(5,2) x").unwrap_err().position(), 8);
        assert_eq!(parse_params("B(5; 1,4; 0; 2,").unwrap_err().position(), 15);
    }

    fn arb_params() -> impl Strategy<Value = BicirculantParams> {
        (1usize..30)
            .prop_flat_map(|m| {
                let reps = proptest::collection::btree_set(1..=m.max(2) / 2, 0..4);
                (
                    Just(m),
                    reps.clone(),
                    proptest::collection::btree_set(1..m.max(2), 0..4),
                    reps,
                )
            })
            .prop_filter_map("regular", |(m, r, s, t)| {
                let sym = |xs: &std::collections::BTreeSet<usize>| -> Vec<i64> {
                    xs.iter()
                        .filter(|&&x| x < m)
                        .flat_map(|&x| [x as i64, -(x as i64)])
                        .collect()
                };
                let mut spokes: Vec<i64> = vec![0];
                spokes.extend(s.iter().filter(|&&x| x < m).map(|&x| x as i64));
                make_params(m, &sym(&r), &spokes, &sym(&t)).ok()
            })
    }

    proptest! {
        #[test]
        fn render_round_trips(p in arb_params()) {
            prop_assert_eq!(parse_params(&render_params(&p)).unwrap(), p);
        }
    }
}
