# Test module for the Quot-scheme intersector
